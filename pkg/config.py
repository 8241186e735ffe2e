# config.py
import os
import logging
from dotenv import load_dotenv

load_dotenv()
logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# --- Series Evaluation ---
SERIES_TOL = float(os.getenv("MODCERT_SERIES_TOL", 1e-15))
MAX_TERMS = int(os.getenv("MODCERT_MAX_TERMS", 10_000))
NEAR_ONE_SWITCH = float(os.getenv("MODCERT_NEAR_ONE_SWITCH", 0.95)) # series path up to and including this z
NEWTON_TOL = float(os.getenv("MODCERT_NEWTON_TOL", 1e-13))
MAX_NEWTON_ITERS = int(os.getenv("MODCERT_MAX_NEWTON_ITERS", 60))

# --- Modular Equation Solver ---
SOLVE_ABS_TOL = float(os.getenv("MODCERT_SOLVE_ABS_TOL", 1e-12))
SOLVE_MAX_ITERS = int(os.getenv("MODCERT_SOLVE_MAX_ITERS", 80))
BRACKET_FLOOR = float(os.getenv("MODCERT_BRACKET_FLOOR", 1e-15))

# --- Certification Harness ---
DEFAULT_SLACK = float(os.getenv("MODCERT_DEFAULT_SLACK", 1e-11))
IDENTITY_TOL = float(os.getenv("MODCERT_IDENTITY_TOL", 1e-9))
FD_REL_TOL = float(os.getenv("MODCERT_FD_REL_TOL", 1e-5))
FD_STEP = float(os.getenv("MODCERT_FD_STEP", 1e-3)) # relative to the local scale of the variable
GRID_MARGIN = float(os.getenv("MODCERT_GRID_MARGIN", 1e-3))

LOG_LEVEL = os.getenv("MODCERT_LOG_LEVEL", "INFO")

# --- Basic Validation ---
for _name, _value in (
    ("MODCERT_SERIES_TOL", SERIES_TOL),
    ("MODCERT_NEWTON_TOL", NEWTON_TOL),
    ("MODCERT_SOLVE_ABS_TOL", SOLVE_ABS_TOL),
    ("MODCERT_BRACKET_FLOOR", BRACKET_FLOOR),
    ("MODCERT_FD_STEP", FD_STEP),
):
    if not 0.0 < _value < 1.0:
        raise ValueError(f"{_name} must lie in (0, 1), got {_value}")
if not 0.0 < NEAR_ONE_SWITCH < 1.0:
    raise ValueError(f"MODCERT_NEAR_ONE_SWITCH must lie in (0, 1), got {NEAR_ONE_SWITCH}")
if MAX_TERMS < 1 or MAX_NEWTON_ITERS < 1 or SOLVE_MAX_ITERS < 1:
    raise ValueError("Iteration caps (MAX_TERMS, MAX_NEWTON_ITERS, SOLVE_MAX_ITERS) must be positive")
if DEFAULT_SLACK < 0.0 or IDENTITY_TOL <= 0.0 or FD_REL_TOL <= 0.0:
    raise ValueError("Harness tolerances must be non-negative (slack) or positive (identity, finite difference)")
if not 0.0 <= GRID_MARGIN < 0.5:
    raise ValueError(f"MODCERT_GRID_MARGIN must lie in [0, 0.5), got {GRID_MARGIN}")
if NEAR_ONE_SWITCH < 0.5:
    logger.warning(f"Config: NEAR_ONE_SWITCH={NEAR_ONE_SWITCH} sends most arguments to the logarithmic expansion.")
if SERIES_TOL > 1e-12:
    logger.warning(f"Config: SERIES_TOL={SERIES_TOL} is looser than the 1e-12 accuracy contract of gauss_2f1.")


def setup_logging(level: str | int | None = None) -> None:
    """Configure root logging once for command-line use."""
    resolved = level if level is not None else LOG_LEVEL
    if isinstance(resolved, str):
        resolved = getattr(logging, resolved.upper(), logging.INFO)
    logging.basicConfig(format=LOG_FORMAT, level=resolved)
    logging.getLogger().setLevel(resolved)
