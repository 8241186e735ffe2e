# harness/checks.py
"""
Building blocks of the certification suites.

A suite evaluates a list of `Check`s at every point of its grid. A check is
either an ordered chain (margin = smallest adjacent gap), an equality
(margin = -|lhs - rhs|) or a detection that must exceed the slack.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Literal, NamedTuple, Sequence

import numpy as np

from models import BoundSides, EvalConfig, GridSpec, ModularSolveConfig

logger = logging.getLogger(__name__)

CheckMode = Literal["chain", "equal", "detect"]


class Check(NamedTuple):
    sides: list[float]
    mode: CheckMode = "chain"
    tol: float | None = None  # replaces the suite slack
    scale: float | None = None  # replaces max(1, |sides|)
    margin: float | None = None  # required for "detect"
    notes: dict[str, float] | None = None
    labels: dict[str, float] | None = None  # extra inputs recorded with the point


@dataclass(frozen=True)
class EvalContext:
    cfg: EvalConfig
    solve_cfg: ModularSolveConfig
    values: dict[str, np.ndarray] = field(default_factory=dict)


Evaluate = Callable[[dict[str, float], EvalContext], list[Check]]


@dataclass(frozen=True)
class Suite:
    suite_id: str
    title: str
    evaluate: Evaluate | None = None
    axes: tuple[str, ...] = ()  # iterated as a product
    sweep: str | None = None  # handed to evaluate whole, through ctx.values
    aux: tuple[str, ...] = ()  # also materialized into ctx.values, never iterated
    grid: GridSpec | None = None  # suite defaults over the global grid
    includes: tuple[str, ...] = ()  # shape or formula ids run into the same report


# --- Building checks ---

def chain(*sides: float, notes: dict[str, float] | None = None, labels: dict[str, float] | None = None) -> Check:
    return Check(sides=[float(v) for v in sides], notes=notes, labels=labels)


def bound_chain(bounds: BoundSides, *inner: float, **kwargs) -> Check:
    """lower <= inner... <= upper, with the bound's own middles kept in order before `inner`."""
    return chain(bounds.lower, *bounds.middles, *inner, bounds.upper, **kwargs)


def equal(lhs: float, rhs: float, tol: float, relative: bool = False, **kwargs) -> Check:
    scale = max(abs(lhs), abs(rhs)) if relative else 1.0
    return Check(sides=[float(lhs), float(rhs)], mode="equal", tol=tol, scale=scale, **kwargs)


def detect(amount: float, sides: Sequence[float], **kwargs) -> Check:
    """Passes only when `amount` is clearly positive."""
    return Check(sides=[float(v) for v in sides], mode="detect", margin=float(amount), **kwargs)


def increasing(values: Sequence[float], lower: float | None = None, upper: float | None = None, **kwargs) -> Check:
    """Ascending grid values increase, and stay inside (lower, upper)."""
    sides = [float(v) for v in values]
    if lower is not None:
        sides.insert(0, float(lower))
    if upper is not None:
        sides.append(float(upper))
    return Check(sides=sides, **kwargs)


def decreasing(values: Sequence[float], lower: float | None = None, upper: float | None = None, **kwargs) -> Check:
    return increasing(list(values)[::-1], lower, upper, **kwargs)


def slopes(xs: Sequence[float], ys: Sequence[float]) -> list[float]:
    """Divided differences on a possibly non-uniform grid."""
    return [(ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]


def convex(xs: Sequence[float], ys: Sequence[float], **kwargs) -> Check:
    return increasing(slopes(xs, ys), **kwargs)


def concave(xs: Sequence[float], ys: Sequence[float], **kwargs) -> Check:
    return decreasing(slopes(xs, ys), **kwargs)


def sign_changes(values: Sequence[float]) -> int:
    """Sign flips of a sequence, exact zeros skipped."""
    signs = [math.copysign(1.0, v) for v in values if v != 0.0 and math.isfinite(v)]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


# --- Verdicts ---

def _magnitude(sides: Sequence[float]) -> float:
    finite = [abs(v) for v in sides if math.isfinite(v)]
    return max([1.0, *finite])


def chain_margin(sides: Sequence[float]) -> float:
    gaps = []
    for lo, hi in zip(sides, sides[1:]):
        if math.isinf(lo) and math.isinf(hi) and lo == hi:
            gaps.append(0.0)
        else:
            gaps.append(hi - lo)
    return min(gaps) if gaps else math.inf


def assess(check: Check, slack: float) -> tuple[float, float, bool]:
    """(margin, slack used, passed)."""
    base = slack if check.tol is None else check.tol
    scale = _magnitude(check.sides) if check.scale is None else check.scale
    slack_used = base * scale
    if check.mode == "detect":
        margin = check.margin if check.margin is not None else math.nan
        return margin, slack_used, bool(margin > slack_used)
    if check.mode == "equal":
        margin = -abs(check.sides[0] - check.sides[1])
    else:
        margin = chain_margin(check.sides) if check.margin is None else check.margin
    if math.isnan(margin):
        return margin, slack_used, False
    return margin, slack_used, margin >= -slack_used
