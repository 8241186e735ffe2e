# harness/grids.py
import logging
import math

import numpy as np

import config
from errors import DomainError
from models import AxisSpec, GridSpec

logger = logging.getLogger(__name__)

# Variables living in (0, 1); the endpoint margin applies to these.
UNIT_AXES = frozenset({"r", "s", "z"})
# Variables living in (0, inf).
POSITIVE_AXES = frozenset({"K", "L", "x", "y", "p", "b"})

DEFAULT_AXES: dict[str, AxisSpec] = {
    "a": AxisSpec(values=(0.05, 0.1, 0.2, 1.0 / 3.0, 0.5)),
    "K": AxisSpec(values=(1.1, 1.5, 2.0, 4.0, 10.0)),
    "L": AxisSpec(values=(0.5, 1.5, 3.0)),
    "r": AxisSpec(lo=1e-3, hi=0.999, count=41, log=True),
    "s": AxisSpec(values=(0.1, 0.3, 0.5, 0.7, 0.9)),
    "p": AxisSpec(values=(2.0, 2.5, 3.0, 5.0)),
    "x": AxisSpec(values=(0.01, 0.1, 1.0, 10.0, 100.0)),
    "y": AxisSpec(values=(0.01, 0.1, 1.0, 10.0, 100.0)),
    "w": AxisSpec(values=(0.25, 0.5, 0.75)),
    # upper parameter of the (a, c) family
    "c": AxisSpec(values=(0.5, 0.75, 1.0)),
    "b": AxisSpec(values=(0.25, 0.5, 1.5, 3.0)),
    "z": AxisSpec(lo=1e-3, hi=0.999, count=31, log=True),
}


def default_grid() -> GridSpec:
    return GridSpec(axes=dict(DEFAULT_AXES), margin=config.GRID_MARGIN)


def axis_values(name: str, axis: AxisSpec, margin: float) -> np.ndarray:
    """Ascending sample values of one axis, restricted to the open domain of the variable."""
    if axis.values is not None:
        values = np.asarray(axis.values, dtype=float)
    elif axis.log:
        values = np.geomspace(axis.lo, axis.hi, axis.count)
    else:
        values = np.linspace(axis.lo, axis.hi, axis.count)
    values = np.unique(values[np.isfinite(values)])

    if name in UNIT_AXES:
        # tolerate lo/hi written exactly at the margin
        eps = 1e-15
        values = values[(values >= margin - eps) & (values <= 1.0 - margin + eps) & (values > 0.0) & (values < 1.0)]
    elif name in POSITIVE_AXES:
        values = values[values > 0.0]
    elif name == "a":
        values = values[(values > 0.0) & (values <= 0.5)]
    elif name == "w":
        values = values[(values > 0.0) & (values < 1.0)]

    if values.size == 0:
        raise DomainError(f"Grid axis '{name}' is empty after applying the domain and margin {margin}")
    return values


def materialize(grid: GridSpec, names: tuple[str, ...]) -> dict[str, np.ndarray]:
    values: dict[str, np.ndarray] = {}
    for name in names:
        axis = grid.axes.get(name)
        if axis is None:
            raise DomainError(f"Grid has no axis '{name}'")
        values[name] = axis_values(name, axis, grid.margin)
    return values


def parse_grid_clause(clause: str) -> tuple[str, AxisSpec]:
    """Parse `var=lo:hi:count[:log]` or `var=v1,v2,...`."""
    name, sep, body = clause.partition("=")
    name, body = name.strip(), body.strip()
    if not sep or not name or not body:
        raise DomainError(f"Grid clause '{clause}' is not of the form var=lo:hi:count[:log]")
    try:
        if ":" not in body:
            return name, AxisSpec(values=tuple(float(v) for v in body.split(",")))
        parts = body.split(":")
        if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "log"):
            raise DomainError(f"Grid clause '{clause}' is not of the form var=lo:hi:count[:log]")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise DomainError(f"Grid clause '{clause}' needs finite lo < hi")
        return name, AxisSpec(lo=lo, hi=hi, count=count, log=len(parts) == 4)
    except DomainError:
        raise
    except ValueError as e:
        # pydantic validation and float() both land here
        raise DomainError(f"Invalid grid clause '{clause}': {e}") from e


def parse_grid(clauses: list[str] | None, margin: float | None = None) -> GridSpec | None:
    if not clauses and margin is None:
        return None
    axes = dict(parse_grid_clause(c) for c in clauses or [])
    return GridSpec(axes=axes, margin=config.GRID_MARGIN if margin is None else margin)
