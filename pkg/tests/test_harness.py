import math

import pytest

import elliptic
import modular
from errors import DomainError, UnknownSuiteError
from harness import SUITES, finite_difference_check, parse_grid, run_suite, shape_check
from harness.checks import Check, assess, chain, chain_margin, concave, convex, detect, equal, sign_changes
from harness.derivatives import FORMULAS, HPolicy, richardson
from harness.grids import axis_values, default_grid, parse_grid_clause
from harness.shapes import SHAPES
from models import AxisSpec, GridSpec

SMALL_R = AxisSpec(lo=0.1, hi=0.9, count=5)


# --- checks ---

def test_chain_margin_and_verdicts():
    assert chain_margin([1.0, 2.0, 2.5]) == pytest.approx(0.5)
    assert chain_margin([math.inf, math.inf]) == 0.0
    margin, _, passed = assess(chain(1.0, 2.0, 3.0), 1e-12)
    assert passed and margin == pytest.approx(1.0)
    margin, _, passed = assess(chain(1.0, 0.5), 1e-12)
    assert not passed and margin == pytest.approx(-0.5)


def test_slack_scales_with_magnitude():
    margin, slack_used, passed = assess(chain(1e6, 1e6 - 1e-7), 1e-12)
    assert slack_used == pytest.approx(1e-6)
    assert passed


def test_equal_and_detect():
    assert assess(equal(1.0, 1.0 + 1e-12, 1e-9), 0.0)[2]
    assert not assess(equal(1.0, 1.1, 1e-9), 0.0)[2]
    assert assess(equal(1e8, 1e8 + 1.0, 1e-7, relative=True), 0.0)[2]
    assert assess(detect(0.1, [1.0, 1.1]), 1e-12)[2]
    assert not assess(detect(0.0, [1.0, 1.0]), 1e-12)[2]


def test_nan_margin_fails():
    assert not assess(Check(sides=[math.nan, 1.0]), 1e-12)[2]


def test_shape_builders():
    xs = [1.0, 2.0, 3.0, 4.0]
    assert assess(convex(xs, [x * x for x in xs]), 1e-12)[2]
    assert not assess(concave(xs, [x * x for x in xs]), 1e-12)[2]
    assert sign_changes([1.0, 0.0, -2.0, -1.0, 3.0]) == 2


# --- grids ---

def test_parse_grid_clauses():
    name, axis = parse_grid_clause("r=0.1:0.9:9")
    assert name == "r" and axis.count == 9 and not axis.log
    name, axis = parse_grid_clause("K=1:10:5:log")
    assert name == "K" and axis.log
    name, axis = parse_grid_clause("a=0.25,0.5")
    assert axis.values == (0.25, 0.5)


@pytest.mark.parametrize("clause", ["r", "r=", "r=0.9:0.1:5", "r=0.1:0.9", "r=0.1:0.9:x", "r=0.1:0.9:5:lin", "K=0:1:5:log"])
def test_parse_grid_rejects(clause):
    with pytest.raises(DomainError):
        parse_grid_clause(clause)


def test_parse_grid_merges_over_defaults():
    assert parse_grid(None) is None
    grid = parse_grid(["r=0.2,0.4"], margin=0.01)
    merged = default_grid().merged(grid)
    assert merged.axes["r"].values == (0.2, 0.4)
    assert merged.axes["K"] == default_grid().axes["K"]
    assert merged.margin == 0.01


def test_axis_values_respect_domain_and_margin():
    values = axis_values("r", AxisSpec(values=(0.0, 0.0005, 0.5, 0.9995, 1.0)), 1e-3)
    assert list(values) == [0.5]
    assert list(axis_values("a", AxisSpec(values=(0.5, 0.7, 0.25)), 0.0)) == [0.25, 0.5]
    with pytest.raises(DomainError):
        axis_values("K", AxisSpec(values=(-1.0,)), 0.0)


# --- runner ---

def test_identity_suite_passes():
    grid = GridSpec(axes={"a": AxisSpec(values=(0.25, 0.5)), "K": AxisSpec(values=(2.0,)), "r": SMALL_R})
    report = run_suite("identity_1_3", grid)
    assert report.passed
    assert report.total_points == 10
    assert report.min_margin <= 0.0
    assert [rec.index for rec in report.records] == list(range(10))
    assert all(rec.mode == "equal" for rec in report.records)


def test_thm17_suite_passes_at_cubic_order():
    grid = GridSpec(axes={"p": AxisSpec(values=(3.0,)), "r": SMALL_R})
    report = run_suite("thm_1_7", grid)
    assert report.passed
    assert report.min_margin > 0.0


def test_wrong_pi_p_is_caught(mocker):
    # pi_2 = pi keeps p = 2 blind to this constant, so the check runs at p = 3
    mocker.patch("bounds.pi_p", return_value=100.0)
    grid = GridSpec(axes={"p": AxisSpec(values=(3.0,)), "r": SMALL_R})
    report = run_suite("thm_1_7", grid)
    assert not report.passed
    assert report.failures[0].verdict == "fail"
    assert report.failures[0].margin < -report.failures[0].slack_used


def test_dK_dr_formula_passes_and_sign_flip_is_caught(mocker):
    grid = GridSpec(axes={"a": AxisSpec(values=(0.25, 0.5)), "r": SMALL_R})
    assert finite_difference_check("dK_dr", grid).passed

    original = elliptic.dK_dr
    mocker.patch("elliptic.dK_dr", side_effect=lambda a, r, cfg=None: -original(a, r, cfg))
    report = finite_difference_check("dK_dr", grid)
    assert len(report.failures) == report.total_points


def test_finite_difference_policy():
    grid = GridSpec(axes={"a": AxisSpec(values=(0.5,)), "r": SMALL_R})
    report = finite_difference_check("dE_dr", grid, HPolicy(step=1e-4, rel_tol=1e-6))
    assert report.passed
    assert all(rec.notes["h"] <= 1e-4 for rec in report.records)


def test_richardson_beats_plain_central():
    plain = (math.exp(0.1) - math.exp(-0.1)) / 0.2
    assert abs(plain - 1.0) > 1e-3
    assert richardson(math.exp, 0.0, 0.1) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("formula_id, axes", [
    # phi_K^a within rounding of 1 for small a
    ("dphi_dr", {"a": (0.05,), "K": (2.0, 4.0), "r": (0.05, 0.8, 0.95)}),
    ("dphi_dK", {"a": (0.05, 0.5), "K": (1.1,), "r": (0.25, 0.9)}),
    # eta_K^a near 1e90 at K = 10
    ("deta_dx", {"a": (0.05, 0.5), "K": (10.0,), "x": (0.05, 50.0)}),
    ("deta_dK", {"a": (0.05,), "K": (1.1, 10.0), "x": (0.05, 5.0, 50.0)}),
])
def test_distortion_derivatives_at_stiff_points(formula_id, axes):
    grid = GridSpec(axes={name: AxisSpec(values=values) for name, values in axes.items()})
    report = finite_difference_check(formula_id, grid)
    assert report.passed, [(rec.inputs, rec.sides) for rec in report.failures]


def test_wrong_dphi_dK_is_caught(mocker):
    original = modular.dphi_dK
    mocker.patch("modular.dphi_dK", side_effect=lambda *args: 1.01 * original(*args))
    grid = GridSpec(axes={"a": AxisSpec(values=(0.2,)), "K": AxisSpec(values=(2.0,)), "r": SMALL_R})
    report = finite_difference_check("dphi_dK", grid)
    assert len(report.failures) == report.total_points


def test_shape_check_and_includes():
    grid = GridSpec(axes={"a": AxisSpec(values=(0.25, 0.5))})
    assert shape_check("lemma_2_10_gap", grid).passed
    report = run_suite("lemma_2_10_1", grid)
    assert report.passed
    assert {rec.suite_id for rec in report.records} >= {"lemma_2_10_gap"}


def test_evaluation_errors_become_failed_records(mocker):
    mocker.patch("bounds.ellK", side_effect=DomainError("boom"))
    grid = GridSpec(axes={"p": AxisSpec(values=(2.0,)), "r": AxisSpec(values=(0.5,))})
    report = run_suite("thm_1_7", grid)
    assert not report.passed
    assert "boom" in report.failures[0].error


def test_unexpected_errors_become_failed_records(mocker):
    mocker.patch("bounds.ellK", side_effect=KeyError("w"))
    grid = GridSpec(axes={"p": AxisSpec(values=(2.0,)), "r": AxisSpec(values=(0.3, 0.5))})
    report = run_suite("thm_1_7", grid)
    assert len(report.failures) == 2
    assert all(rec.error.startswith("KeyError") for rec in report.failures)
    assert not report.non_converged


def test_lambda_power_shape_builds_its_w_axis():
    report = shape_check("thm_3_12_3_monotone", GridSpec(axes={"a": AxisSpec(values=(0.25, 0.5))}))
    assert report.passed
    assert {rec.inputs["w"] for rec in report.records if "w" in rec.inputs} == {0.25, 0.5, 0.75}


def test_empty_grid_is_a_domain_error():
    with pytest.raises(DomainError):
        run_suite("thm_1_7", GridSpec(axes={"r": AxisSpec(values=(1.5,))}))


def test_negative_slack_is_rejected():
    with pytest.raises(ValueError):
        run_suite("thm_1_7", slack=-1.0)


def test_unknown_ids():
    with pytest.raises(UnknownSuiteError):
        run_suite("thm_9_9")
    with pytest.raises(UnknownSuiteError):
        shape_check("thm_1_7")
    with pytest.raises(UnknownSuiteError):
        finite_difference_check("d_nothing")


def test_registries_resolve_their_includes():
    known = set(SHAPES) | set(FORMULAS)
    for suite in SUITES.values():
        assert set(suite.includes) <= known, suite.suite_id
        assert suite.evaluate is not None or suite.includes, suite.suite_id
