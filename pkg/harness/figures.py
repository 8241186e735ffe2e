# harness/figures.py
"""Tabular data behind the two comparison figures."""
import logging
from pathlib import Path

import pandas as pd

import bounds
import elliptic
from errors import UnknownSuiteError
from harness.checks import EvalContext
from harness.grids import default_grid, materialize
from harness.quantities import addition_radius, phi_modulus, radius
from harness.reporting import write_table
from models import AxisSpec, EvalConfig, GridSpec, ModularSolveConfig

logger = logging.getLogger(__name__)

# r = 0.01, 0.02, ..., 0.99 and 0.999
FIGURE_R = AxisSpec(values=tuple(round(0.01 * i, 2) for i in range(1, 100)) + (0.999,))
FIGURE_GRID = GridSpec(axes={"r": FIGURE_R})

# parameters of the second figure
CROSSOVER_A = 0.2
CROSSOVER_K = 1.5
CROSSOVER_P = 1.3
CROSSOVER_S = 0.5
# g exceeds h on (CROSSOVER_BETTER_FROM, 1); the single crossing lies below it
CROSSOVER_BETTER_FROM = 0.2

FIGURE_COLUMNS = {
    "1": ("r", "thm17_upper", "aq_upper", "ellK"),
    "2": ("r", "g", "h"),
}


def dominance_row(r: float, cfg: EvalConfig | None = None) -> dict[str, float]:
    """Upper bounds of K(r) through artanh_2 and through artanh(r)/r, next to K(r) itself."""
    rr = radius(r)
    return {
        "r": r,
        "thm17_upper": bounds.thm17_chain(2.0, rr, cfg).upper,
        "aq_upper": bounds.aq_bounds(rr).upper,
        "ellK": elliptic.ellK(0.5, rr, cfg),
    }


def _addition(x: float, y: float) -> float:
    return (x + y) / (1.0 + x * y)


def crossover_row(r: float, ctx: EvalContext) -> dict[str, float]:
    """
    g: lower side of the power-mean chain for the addition (x + y)/(1 + xy) of phi_K values.
    h: phi_K((r + s)/(1 + rs)).
    """
    a, K, p = CROSSOVER_A, CROSSOVER_K, CROSSOVER_P
    rr, ss = radius(r), radius(CROSSOVER_S)
    lifted_r = phi_modulus(a, K, rr.power(p), ctx).r ** (1.0 / p)
    lifted_s = phi_modulus(a, K, ss.power(p), ctx).r ** (1.0 / p)
    return {
        "r": r,
        "g": _addition(lifted_r, lifted_s),
        "h": phi_modulus(a, K, addition_radius(rr, ss), ctx).r,
    }


def figure_frame(
    figure_id: str,
    grid: GridSpec | None = None,
    cfg: EvalConfig | None = None,
    solve_cfg: ModularSolveConfig | None = None,
) -> pd.DataFrame:
    figure_id = str(figure_id)
    if figure_id not in FIGURE_COLUMNS:
        raise UnknownSuiteError("figure", figure_id, list(FIGURE_COLUMNS))
    rs = materialize(default_grid().merged(FIGURE_GRID).merged(grid), ("r",))["r"]
    if figure_id == "1":
        rows = [dominance_row(float(r), cfg) for r in rs]
    else:
        ctx = EvalContext(cfg=cfg or EvalConfig(), solve_cfg=solve_cfg or ModularSolveConfig())
        rows = [crossover_row(float(r), ctx) for r in rs]
    return pd.DataFrame(rows, columns=list(FIGURE_COLUMNS[figure_id]))


def emit_figure(
    figure_id: str | int,
    grid: GridSpec | None = None,
    fmt: str = "csv",
    path: str | Path | None = None,
    cfg: EvalConfig | None = None,
    solve_cfg: ModularSolveConfig | None = None,
) -> pd.DataFrame:
    """Build the table of one figure and, when a path is given, write it as csv or json."""
    frame = figure_frame(str(figure_id), grid, cfg, solve_cfg)
    if path is not None:
        write_table(frame, path, fmt)
        logger.info(f"Figure {figure_id}: wrote {len(frame)} rows to {path}")
    return frame
