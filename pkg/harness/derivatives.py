# harness/derivatives.py
"""
Closed-form derivatives checked against central differences.

Each formula is looked up through its module at call time, so a patched
`elliptic.dK_dr` (or any other) is the one that gets certified.

The difference quotient is Richardson-extrapolated from steps h and h/2.
phi_K^a is differenced through its log-odds log(s/s') and eta_K^a through
its logarithm: both stay well conditioned where s is within rounding of 0
or 1, and the closed form is divided by the matching Jacobian (s s'^2 or eta).
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import config
import elliptic
import modular
from harness.checks import Check, EvalContext, Suite, equal
from harness.quantities import radius
from models import AxisSpec, GridSpec

logger = logging.getLogger(__name__)

Scalar = Callable[[dict[str, float], EvalContext], float]
Forms = Callable[[dict[str, float], EvalContext], tuple[float, ...]]


class HPolicy(NamedTuple):
    """Central-difference step, relative to min(r, 1 - r) for moduli and to the value otherwise."""

    step: float = config.FD_STEP
    rel_tol: float = config.FD_REL_TOL


@dataclass(frozen=True)
class Formula:
    formula_id: str
    title: str
    axes: tuple[str, ...]
    variable: str
    value: Scalar
    closed: Scalar
    forms: Forms | None = None


FD_GRID = GridSpec(axes={"r": AxisSpec(lo=0.05, hi=0.95, count=19), "x": AxisSpec(values=(0.05, 0.5, 1.0, 5.0, 50.0))})


def _step(variable: str, value: float, policy: HPolicy) -> float:
    if variable == "r":
        return policy.step * min(value, 1.0 - value)
    return policy.step * abs(value)


def richardson(f: Callable[[float], float], v: float, h: float) -> float:
    """(4 D(h/2) - D(h))/3 with D the central difference; error O(h^4)."""
    def central(step: float) -> float:
        return (f(v + step) - f(v - step)) / (2.0 * step)

    return (4.0 * central(0.5 * h) - central(h)) / 3.0


def _evaluator(formula: Formula, policy: HPolicy):
    def evaluate(point: dict[str, float], ctx: EvalContext) -> list[Check]:
        v = point[formula.variable]
        h = _step(formula.variable, v, policy)
        numeric = richardson(lambda t: formula.value({**point, formula.variable: t}, ctx), v, h)
        closed = formula.closed(point, ctx)
        checks = [equal(closed, numeric, policy.rel_tol, relative=True, notes={"h": h})]
        if formula.forms is not None:
            forms = formula.forms(point, ctx)
            notes = {f"form_{i + 1}": f for i, f in enumerate(forms)}
            checks.append(equal(min(forms), max(forms), config.IDENTITY_TOL, relative=True, notes=notes))
        return checks

    return evaluate


def formula_suite(formula_id: str, policy: HPolicy | None = None) -> Suite:
    formula = _FORMULA_DEFS[formula_id]
    return Suite(
        suite_id=formula.formula_id,
        title=formula.title,
        evaluate=_evaluator(formula, policy or HPolicy()),
        axes=formula.axes,
        grid=FD_GRID,
    )


# --- phi and eta in well-conditioned coordinates ---

def _phi_point(pt: dict[str, float], ctx: EvalContext):
    return modular.phi_solution(pt["a"], pt["K"], radius(pt["r"]), ctx.solve_cfg, ctx.cfg)


def _eta_point(pt: dict[str, float], ctx: EvalContext):
    return modular.phi_solution(pt["a"], pt["K"], modular.eta_radius(pt["x"]), ctx.solve_cfg, ctx.cfg)


def _log_odds(pt: dict[str, float], ctx: EvalContext) -> float:
    sol = _phi_point(pt, ctx)
    return math.log(sol.s) - math.log(sol.s_complement)


def _odds_jacobian(pt: dict[str, float], ctx: EvalContext) -> float:
    """d log(s/s')/ds = 1/(s s'^2)."""
    sol = _phi_point(pt, ctx)
    return sol.s * sol.s_complement ** 2


def _log_eta(pt: dict[str, float], ctx: EvalContext) -> float:
    sol = _eta_point(pt, ctx)
    return 2.0 * (math.log(sol.s) - math.log(sol.s_complement))


def _eta_value(pt: dict[str, float], ctx: EvalContext) -> float:
    sol = _eta_point(pt, ctx)
    return (sol.s / sol.s_complement) ** 2


_FORMULA_DEFS: dict[str, Formula] = {
    f.formula_id: f
    for f in (
        Formula(
            "dK_dr", "dK_a/dr = 2(1-a)(E_a - r'^2 K_a)/(r r'^2)", ("a", "r"), "r",
            value=lambda pt, ctx: elliptic.ellK(pt["a"], radius(pt["r"]), ctx.cfg),
            closed=lambda pt, ctx: elliptic.dK_dr(pt["a"], radius(pt["r"]), ctx.cfg),
        ),
        Formula(
            "dE_dr", "dE_a/dr = 2(a-1)(K_a - E_a)/r", ("a", "r"), "r",
            value=lambda pt, ctx: elliptic.ellE(pt["a"], radius(pt["r"]), ctx.cfg),
            closed=lambda pt, ctx: elliptic.dE_dr(pt["a"], radius(pt["r"]), ctx.cfg),
        ),
        Formula(
            "dmu_dr", "d mu_a/dr = -pi^2/(4 r r'^2 K_a(r)^2)", ("a", "r"), "r",
            value=lambda pt, ctx: modular.mu(pt["a"], radius(pt["r"]), ctx.cfg),
            closed=lambda pt, ctx: modular.dmu_dr(pt["a"], radius(pt["r"]), ctx.cfg),
        ),
        Formula(
            "dphi_dr", "d phi_K^a/dr, three equal forms, as d log(s/s')/dr", ("a", "K", "r"), "r",
            value=_log_odds,
            closed=lambda pt, ctx: (
                modular.dphi_dr(pt["a"], pt["K"], radius(pt["r"]), ctx.solve_cfg, ctx.cfg) / _odds_jacobian(pt, ctx)
            ),
            forms=lambda pt, ctx: modular.dphi_dr_forms(pt["a"], pt["K"], radius(pt["r"]), ctx.solve_cfg, ctx.cfg),
        ),
        Formula(
            "dphi_dK", "d phi_K^a/dK = 4 s s'^2 K_a(s)^2 mu_a(r)/(pi^2 K^2), as d log(s/s')/dK", ("a", "K", "r"), "K",
            value=_log_odds,
            closed=lambda pt, ctx: (
                modular.dphi_dK(pt["a"], pt["K"], radius(pt["r"]), ctx.solve_cfg, ctx.cfg) / _odds_jacobian(pt, ctx)
            ),
        ),
        Formula(
            "deta_dx", "d eta_K^a/dx, three equal forms, as d log(eta)/dx", ("a", "K", "x"), "x",
            value=_log_eta,
            closed=lambda pt, ctx: (
                modular.deta_dx(pt["a"], pt["K"], pt["x"], ctx.solve_cfg, ctx.cfg) / _eta_value(pt, ctx)
            ),
            forms=lambda pt, ctx: modular.deta_dx_forms(pt["a"], pt["K"], pt["x"], ctx.solve_cfg, ctx.cfg),
        ),
        Formula(
            "deta_dK", "d eta_K^a/dK = 8 eta mu_a(r) K_a(s)^2/(pi^2 K^2), as d log(eta)/dK", ("a", "K", "x"), "K",
            value=_log_eta,
            closed=lambda pt, ctx: (
                modular.deta_dK(pt["a"], pt["K"], pt["x"], ctx.solve_cfg, ctx.cfg) / _eta_value(pt, ctx)
            ),
        ),
    )
}

FORMULAS: dict[str, Suite] = {formula_id: formula_suite(formula_id) for formula_id in _FORMULA_DEFS}
