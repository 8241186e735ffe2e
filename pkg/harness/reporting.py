# harness/reporting.py
import json
import logging
from pathlib import Path
from typing import Iterable

import pandas as pd

from errors import DomainError
from models import SuiteReport

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")
FLOAT_FORMAT = "%.17g"

RECORD_COLUMNS = [
    "suite_id", "index", "inputs", "sides", "margin", "slack_used", "verdict", "mode", "error", "notes",
]


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise DomainError(f"Unknown output format '{fmt}', expected one of {', '.join(FORMATS)}")
    return fmt


def _json_cell(value) -> str:
    # repr keeps every float round-trippable; inf and nan stay readable
    return json.dumps(value, sort_keys=True, allow_nan=True)


def records_frame(reports: Iterable[SuiteReport]) -> pd.DataFrame:
    """One row per checked instance, inputs/sides/notes as JSON text."""
    rows = []
    for report in reports:
        for rec in report.records:
            rows.append({
                "suite_id": rec.suite_id,
                "index": rec.index,
                "inputs": _json_cell(rec.inputs),
                "sides": _json_cell(rec.sides),
                "margin": rec.margin,
                "slack_used": rec.slack_used,
                "verdict": rec.verdict,
                "mode": rec.mode,
                "error": rec.error or "",
                "notes": _json_cell(rec.notes),
            })
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def summary_frame(reports: Iterable[SuiteReport]) -> pd.DataFrame:
    rows = [
        {
            "suite_id": report.suite_id,
            "total_points": report.total_points,
            "failures": len(report.failures),
            "min_margin": report.min_margin,
            "wall_time": report.wall_time,
            "passed": report.passed,
        }
        for report in reports
    ]
    return pd.DataFrame(rows, columns=["suite_id", "total_points", "failures", "min_margin", "wall_time", "passed"])


def write_records(reports: list[SuiteReport], path: str | Path, fmt: str = "csv") -> None:
    """Write every CheckRecord of the reports; output is byte-identical across identical runs."""
    fmt = _check_format(fmt)
    path = Path(path)
    if fmt == "csv":
        records_frame(reports).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    else:
        body = ",\n".join(rec.model_dump_json() for report in reports for rec in report.records)
        path.write_text(f"[\n{body}\n]\n" if body else "[]\n", encoding="utf-8")
    logger.info(f"Wrote {sum(len(r.records) for r in reports)} records to {path}")


def write_table(frame: pd.DataFrame, path: str | Path, fmt: str = "csv") -> None:
    fmt = _check_format(fmt)
    path = Path(path)
    if fmt == "csv":
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    else:
        path.write_text(json.dumps(frame.to_dict(orient="records"), indent=2) + "\n", encoding="utf-8")
