from harness.figures import emit_figure
from harness.grids import default_grid, parse_grid
from harness.reporting import records_frame, summary_frame, write_records
from harness.runner import finite_difference_check, run_suite, shape_check
from harness.suites import SUITES

__all__ = [
    "SUITES",
    "default_grid",
    "emit_figure",
    "finite_difference_check",
    "parse_grid",
    "records_frame",
    "run_suite",
    "shape_check",
    "summary_frame",
    "write_records",
]
