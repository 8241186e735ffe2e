# harness/runner.py
import itertools
import logging
import math
import time

from pydantic import ValidationError

import config
from errors import DomainError, ModularError, UnknownSuiteError
from harness.checks import EvalContext, Suite, assess
from harness.derivatives import FORMULAS, HPolicy, formula_suite
from harness.grids import default_grid, materialize
from harness.shapes import SHAPES
from harness.suites import SUITES
from models import CheckRecord, EvalConfig, GridSpec, ModularSolveConfig, SuiteReport

logger = logging.getLogger(__name__)


def _lookup_include(identifier: str) -> Suite:
    if identifier in SHAPES:
        return SHAPES[identifier]
    if identifier in FORMULAS:
        return FORMULAS[identifier]
    raise UnknownSuiteError("shape property or formula", identifier, [*SHAPES, *FORMULAS])


def _effective_grid(suite: Suite, grid: GridSpec | None) -> GridSpec:
    return default_grid().merged(suite.grid).merged(grid)


def _error_record(suite_id: str, index: int, inputs: dict[str, float], e: Exception) -> CheckRecord:
    return CheckRecord(
        suite_id=suite_id,
        index=index,
        inputs=inputs,
        sides=[],
        margin=math.nan,
        slack_used=0.0,
        verdict="fail",
        error=f"{type(e).__name__}: {e}",
    )


def _records(
    suite: Suite,
    grid: GridSpec | None,
    slack: float,
    ctx: EvalContext,
    start: int = 0,
) -> list[CheckRecord]:
    """All records of one suite and the suites it includes, numbered from `start`."""
    records: list[CheckRecord] = []
    if suite.evaluate is not None:
        names = suite.axes + ((suite.sweep,) if suite.sweep else ()) + suite.aux
        values = materialize(_effective_grid(suite, grid), names)
        ctx = EvalContext(cfg=ctx.cfg, solve_cfg=ctx.solve_cfg, values=values)
        for combo in itertools.product(*(values[name] for name in suite.axes)):
            point = {name: float(v) for name, v in zip(suite.axes, combo)}
            if suite.sweep:
                inputs = {**point, f"{suite.sweep}_lo": float(values[suite.sweep][0]),
                          f"{suite.sweep}_hi": float(values[suite.sweep][-1])}
            else:
                inputs = dict(point)
            try:
                checks = suite.evaluate(point, ctx)
            except (ModularError, ValidationError) as e:
                logger.error(f"Suite {suite.suite_id}: evaluation failed at {inputs}: {e}", exc_info=True)
                records.append(_error_record(suite.suite_id, start + len(records), inputs, e))
                continue
            except Exception as e:
                logger.error(f"Suite {suite.suite_id}: unexpected {type(e).__name__} at {inputs}: {e}", exc_info=True)
                records.append(_error_record(suite.suite_id, start + len(records), inputs, e))
                continue
            for check in checks:
                margin, slack_used, passed = assess(check, slack)
                records.append(CheckRecord(
                    suite_id=suite.suite_id,
                    index=start + len(records),
                    inputs={**inputs, **(check.labels or {})},
                    sides=check.sides,
                    margin=margin,
                    slack_used=slack_used,
                    verdict="pass" if passed else "fail",
                    mode=check.mode,
                    notes=check.notes or {},
                ))
    for identifier in suite.includes:
        records.extend(_records(_lookup_include(identifier), grid, slack, ctx, start + len(records)))
    return records


def execute(
    suite: Suite,
    grid: GridSpec | None = None,
    slack: float | None = None,
    cfg: EvalConfig | None = None,
    solve_cfg: ModularSolveConfig | None = None,
) -> SuiteReport:
    slack = config.DEFAULT_SLACK if slack is None else slack
    if slack < 0.0:
        raise ValueError(f"slack must be non-negative, got {slack}")
    ctx = EvalContext(cfg=cfg or EvalConfig(), solve_cfg=solve_cfg or ModularSolveConfig())

    started = time.perf_counter()
    records = _records(suite, grid, slack, ctx)
    wall_time = time.perf_counter() - started

    if not records:
        raise DomainError(f"Suite {suite.suite_id} produced no checks on the given grid")
    margins = [rec.margin for rec in records if not math.isnan(rec.margin)]
    report = SuiteReport(
        suite_id=suite.suite_id,
        total_points=len(records),
        failures=[rec for rec in records if rec.verdict == "fail"],
        min_margin=min(margins) if margins else math.nan,
        wall_time=wall_time,
        records=records,
    )
    log = logger.info if report.passed else logger.warning
    log(
        f"Suite {suite.suite_id}: {report.total_points} checks, {len(report.failures)} failures, "
        f"min margin {report.min_margin:.3e}, {wall_time:.2f}s"
    )
    return report


def run_suite(
    suite_id: str,
    grid: GridSpec | None = None,
    slack: float | None = None,
    cfg: EvalConfig | None = None,
    solve_cfg: ModularSolveConfig | None = None,
) -> SuiteReport:
    """Evaluate one registered inequality suite over its grid."""
    suite = SUITES.get(suite_id)
    if suite is None:
        raise UnknownSuiteError("suite", suite_id, list(SUITES))
    return execute(suite, grid, slack, cfg, solve_cfg)


def shape_check(
    property_id: str,
    grid: GridSpec | None = None,
    cfg: EvalConfig | None = None,
    slack: float | None = None,
    solve_cfg: ModularSolveConfig | None = None,
) -> SuiteReport:
    """Monotonicity, convexity and range claims of one registered property."""
    suite = SHAPES.get(property_id)
    if suite is None:
        raise UnknownSuiteError("shape property", property_id, list(SHAPES))
    return execute(suite, grid, slack, cfg, solve_cfg)


def finite_difference_check(
    formula_id: str,
    grid: GridSpec | None = None,
    h_policy: HPolicy | None = None,
    cfg: EvalConfig | None = None,
    solve_cfg: ModularSolveConfig | None = None,
) -> SuiteReport:
    """A closed-form derivative against central differences."""
    if formula_id not in FORMULAS:
        raise UnknownSuiteError("formula", formula_id, list(FORMULAS))
    suite = formula_suite(formula_id, h_policy) if h_policy is not None else FORMULAS[formula_id]
    return execute(suite, grid, None, cfg, solve_cfg)
