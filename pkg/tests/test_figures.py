import json

import pandas as pd
import pytest

from errors import DomainError, UnknownSuiteError
from harness import emit_figure, records_frame, run_suite, summary_frame, write_records
from harness.checks import sign_changes
from harness.figures import CROSSOVER_BETTER_FROM, CROSSOVER_S, FIGURE_COLUMNS, dominance_row
from models import AxisSpec, GridSpec

FEW_R = GridSpec(axes={"r": AxisSpec(values=(0.2, 0.5, 0.8))})


def test_dominance_row_at_half():
    row = dominance_row(0.5)
    assert [row[c] for c in FIGURE_COLUMNS["1"]] == pytest.approx([0.5, 1.7146, 1.7257, 1.6858], abs=1e-4)


def test_figure_one_frame():
    frame = emit_figure(1, FEW_R)
    assert list(frame.columns) == list(FIGURE_COLUMNS["1"])
    assert list(frame["r"]) == [0.2, 0.5, 0.8]
    assert (frame["ellK"] < frame["thm17_upper"]).all()
    assert (frame["thm17_upper"] < frame["aq_upper"]).all()


def test_figure_default_grid_has_a_hundred_rows():
    frame = emit_figure("1")
    assert len(frame) == 100
    assert frame["r"].iloc[-1] == 0.999


def test_figure_two_columns_are_moduli():
    frame = emit_figure("2", GridSpec(axes={"r": AxisSpec(values=(0.05, CROSSOVER_S, 0.9))}))
    assert list(frame.columns) == ["r", "g", "h"]
    assert ((frame[["g", "h"]] > 0.0) & (frame[["g", "h"]] < 1.0)).all().all()
    # g lies above h away from the crossing
    assert frame["g"].iloc[-1] > frame["h"].iloc[-1]


def test_figure_two_crosses_once_before_the_power_mean_bound_wins():
    frame = emit_figure("2")
    diff = (frame["g"] - frame["h"]).tolist()
    assert sign_changes(diff) == 1
    assert diff[0] < 0.0
    better = frame[frame["r"] >= CROSSOVER_BETTER_FROM]
    assert (better["g"] > better["h"]).all()
    assert (frame[frame["r"] >= 0.25]["g"] > frame[frame["r"] >= 0.25]["h"]).all()


def test_figure_two_suite_passes():
    report = run_suite("fig_2_crossover")
    assert report.passed
    crossing = next(rec for rec in report.records if "crossing" in rec.notes).notes["crossing"]
    assert 0.0 < crossing < CROSSOVER_BETTER_FROM


def test_figure_output_files(tmp_path):
    csv_path = tmp_path / "fig1.csv"
    json_path = tmp_path / "fig1.json"
    emit_figure("1", FEW_R, "csv", csv_path)
    emit_figure("1", FEW_R, "json", json_path)
    frame = pd.read_csv(csv_path)
    assert list(frame.columns) == list(FIGURE_COLUMNS["1"])
    rows = json.loads(json_path.read_text())
    assert len(rows) == 3 and rows[1]["r"] == 0.5


def test_figure_errors(tmp_path):
    with pytest.raises(UnknownSuiteError):
        emit_figure("3")
    with pytest.raises(DomainError):
        emit_figure("1", FEW_R, "xml", tmp_path / "fig.xml")


@pytest.fixture
def reports():
    grid = GridSpec(axes={"p": AxisSpec(values=(2.0,)), "r": AxisSpec(values=(0.3, 0.6))})
    return [run_suite("thm_1_7", grid), run_suite("thm_1_9_1", grid)]


def test_records_and_summary_frames(reports):
    records = records_frame(reports)
    assert len(records) == 4
    assert json.loads(records["inputs"].iloc[0]) == {"p": 2.0, "r": 0.3}
    assert len(json.loads(records["sides"].iloc[0])) == 4
    summary = summary_frame(reports)
    assert list(summary["suite_id"]) == ["thm_1_7", "thm_1_9_1"]
    assert summary["passed"].all()


def test_write_records_is_reproducible(reports, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    write_records(reports, first)
    write_records(reports, second)
    assert first.read_bytes() == second.read_bytes()

    out = tmp_path / "records.json"
    write_records(reports, out, "json")
    rows = json.loads(out.read_text())
    assert [row["suite_id"] for row in rows] == ["thm_1_7", "thm_1_7", "thm_1_9_1", "thm_1_9_1"]
    assert all(row["verdict"] == "pass" for row in rows)
