# cli.py
import argparse
import logging
import sys
from typing import Callable

import config
import elliptic
import hypergeometric
import modular
import scalar_special
from errors import DomainError, ModularError, NonConvergenceError, UnknownSuiteError
from harness.derivatives import FORMULAS
from harness.figures import FIGURE_COLUMNS, emit_figure
from harness.grids import parse_grid
from harness.reporting import FORMATS, summary_frame, write_records
from harness.runner import finite_difference_check, run_suite, shape_check
from harness.shapes import SHAPES
from harness.suites import SUITES
from models import EvalConfig, ModularSolveConfig, Radius, TriParam

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NON_CONVERGENCE = 3


def _require(args: argparse.Namespace, *names: str) -> list[float]:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"--fn {args.fn} needs {', '.join(missing)}")
    return [getattr(args, n) for n in names]


def _tri(args: argparse.Namespace) -> TriParam:
    a, c = _require(args, "a", "c")
    if args.b is None:
        return TriParam.shorthand(a, c)
    return TriParam(a=a, b=args.b, c=c)


def _sym(args: argparse.Namespace) -> Radius:
    (r,) = _require(args, "r")
    return Radius.from_r(r)


EVALUATORS: dict[str, Callable[[argparse.Namespace, EvalConfig, ModularSolveConfig], float]] = {
    "hyp2f1": lambda ns, cfg, sc: hypergeometric.hyp2f1(*_require(ns, "a", "b", "c", "z"), cfg),
    "ellK": lambda ns, cfg, sc: elliptic.ellK(_require(ns, "a")[0], _sym(ns), cfg),
    "ellE": lambda ns, cfg, sc: elliptic.ellE(_require(ns, "a")[0], _sym(ns), cfg),
    "ellKc": lambda ns, cfg, sc: elliptic.ellKc(_require(ns, "a")[0], _sym(ns), cfg),
    "ellEc": lambda ns, cfg, sc: elliptic.ellEc(_require(ns, "a")[0], _sym(ns), cfg),
    "mu": lambda ns, cfg, sc: modular.mu(_require(ns, "a")[0], _sym(ns), cfg),
    "mu_inv": lambda ns, cfg, sc: modular.mu_inv(*_require(ns, "a", "y"), sc, cfg).s,
    "phi": lambda ns, cfg, sc: modular.phi(*_require(ns, "a", "K"), _sym(ns), sc, cfg),
    "eta": lambda ns, cfg, sc: modular.eta(*_require(ns, "a", "K", "x"), sc, cfg),
    "lambda": lambda ns, cfg, sc: modular.lambda_fn(*_require(ns, "a", "K"), sc, cfg),
    "mu3": lambda ns, cfg, sc: modular.mu3(_tri(ns), _sym(ns), cfg),
    "phi3": lambda ns, cfg, sc: modular.phi3(_tri(ns), _require(ns, "K")[0], _sym(ns), sc, cfg),
    "ellK3": lambda ns, cfg, sc: elliptic.ellK3(_tri(ns), _sym(ns), cfg),
    "ellE3": lambda ns, cfg, sc: elliptic.ellE3(_tri(ns), _sym(ns), cfg),
    "legendre_M": lambda ns, cfg, sc: elliptic.legendre_M(_tri(ns), _sym(ns), cfg),
    "artanh_p": lambda ns, cfg, sc: scalar_special.artanh_p(*_require(ns, "p", "x"), cfg),
    "pi_p": lambda ns, cfg, sc: scalar_special.pi_p(_require(ns, "p")[0]),
    "ramanujan_R": lambda ns, cfg, sc: scalar_special.ramanujan_R(_require(ns, "a")[0]),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modcert",
        description="Generalized elliptic integrals, modular functions and certification of their inequalities.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="Evaluate one function", formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    ev.add_argument("--fn", required=True, choices=sorted(EVALUATORS), help="Function id")
    for name in ("a", "b", "c", "r", "K", "x", "y", "p", "z"):
        ev.add_argument(f"--{name}", type=float, default=None)

    so = sub.add_parser("solve", help="Solve the modular equation mu_a(s) = p mu_a(r)",
                        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    so.add_argument("--a", type=float, required=True)
    degree = so.add_mutually_exclusive_group(required=True)
    degree.add_argument("--p", type=float, help="Degree; solves with K = 1/p")
    degree.add_argument("--K", type=float, help="Distortion K of phi_K")
    so.add_argument("--r", type=float, required=True)

    ch = sub.add_parser("check", help="Run inequality suites, shape properties or derivative formulas",
                        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    ch.add_argument("ids", nargs="*", help="Suite, shape or formula ids")
    ch.add_argument("--all", action="store_true", help="Run every registered suite")
    ch.add_argument("--list", action="store_true", help="List registered ids and exit")
    ch.add_argument("--grid", action="append", default=[], help="Axis override var=lo:hi:count[:log] or var=v1,v2")
    ch.add_argument("--margin", type=float, default=None, help="Endpoint margin of unit-interval axes")
    ch.add_argument("--slack", type=float, default=config.DEFAULT_SLACK)
    ch.add_argument("--out", default=None, help="Write every check record to this path")
    ch.add_argument("--format", choices=FORMATS, default="csv")

    fi = sub.add_parser("figure", help="Emit the data of a comparison figure",
                        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    fi.add_argument("id", choices=sorted(FIGURE_COLUMNS))
    fi.add_argument("--out", default=None, help="Output path; the table is printed when omitted")
    fi.add_argument("--format", choices=FORMATS, default="csv")
    fi.add_argument("--grid", action="append", default=[])
    return parser


def _run_check(args: argparse.Namespace, cfg: EvalConfig, solve_cfg: ModularSolveConfig) -> int:
    if args.list:
        for title, registry in (("suites", SUITES), ("shapes", SHAPES), ("formulas", FORMULAS)):
            print(f"# {title}")
            for identifier, suite in registry.items():
                print(f"{identifier}\t{suite.title}")
        return EXIT_OK

    ids = list(SUITES) if args.all else args.ids
    if not ids:
        raise DomainError("check needs at least one id, or --all")
    grid = parse_grid(args.grid, args.margin)

    reports = []
    for identifier in ids:
        if identifier in SUITES:
            reports.append(run_suite(identifier, grid, args.slack, cfg, solve_cfg))
        elif identifier in SHAPES:
            reports.append(shape_check(identifier, grid, cfg, args.slack, solve_cfg))
        elif identifier in FORMULAS:
            reports.append(finite_difference_check(identifier, grid, None, cfg, solve_cfg))
        else:
            raise UnknownSuiteError("id", identifier, [*SUITES, *SHAPES, *FORMULAS])

    print(summary_frame(reports).to_string(index=False))
    if args.out:
        write_records(reports, args.out, args.format)

    if any(report.non_converged for report in reports):
        return EXIT_NON_CONVERGENCE
    if any(not report.passed for report in reports):
        return EXIT_FAILURE
    return EXIT_OK


def _dispatch(args: argparse.Namespace) -> int:
    cfg, solve_cfg = EvalConfig(), ModularSolveConfig()
    if args.command == "eval":
        value = EVALUATORS[args.fn](args, cfg, solve_cfg)
        print(f"{value:.17g}")
        return EXIT_OK
    if args.command == "solve":
        K = 1.0 / args.p if args.p is not None else args.K
        solution = modular.phi_solution(args.a, K, Radius.from_r(args.r), solve_cfg, cfg)
        print(solution.model_dump_json(indent=2))
        return EXIT_OK
    if args.command == "check":
        return _run_check(args, cfg, solve_cfg)
    frame = emit_figure(args.id, parse_grid(args.grid), args.format, args.out, cfg, solve_cfg)
    if args.out is None:
        print(frame.to_csv(index=False, float_format="%.17g"), end="")
    return EXIT_OK


def cli_main(argv: list[str] | None = None) -> int:
    """Run one command; returns 0 on success, 1 on inequality failures, 2 on usage errors, 3 on non-convergence."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    config.setup_logging(logging.DEBUG if args.verbose else None)
    try:
        return _dispatch(args)
    except NonConvergenceError as e:
        logger.error(f"Did not converge: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except (DomainError, UnknownSuiteError, ValueError) as e:
        # pydantic ValidationError is a ValueError
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ModularError as e:
        logger.error(f"Command failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
