import json
import math
from collections import Counter

import pandas as pd
import pytest

from cli import EXIT_FAILURE, EXIT_NON_CONVERGENCE, EXIT_OK, EXIT_USAGE, cli_main
from errors import NonConvergenceError
from harness import SUITES


def test_eval_mu_at_symmetric_point(capsys):
    assert cli_main(["eval", "--fn", "mu", "--a", "0.5", "--r", "0.70710678"]) == EXIT_OK
    assert float(capsys.readouterr().out) == pytest.approx(1.5707963, abs=1e-7)


@pytest.mark.parametrize("argv, expected", [
    (["eval", "--fn", "ellK", "--a", "0.5", "--r", "0.70710678118654752"], 1.8540747),
    (["eval", "--fn", "pi_p", "--p", "4"], math.pi / math.sqrt(2)),
    (["eval", "--fn", "lambda", "--a", "0.5", "--K", "2"], 16 + 12 * math.sqrt(2)),
    (["eval", "--fn", "legendre_M", "--a", "0.5", "--c", "1", "--r", "0.3"], 1 / math.pi),
])
def test_eval_functions(capsys, argv, expected):
    assert cli_main(argv) == EXIT_OK
    assert float(capsys.readouterr().out) == pytest.approx(expected, rel=1e-6)


def test_solve_degree_two(capsys):
    assert cli_main(["solve", "--a", "0.5", "--p", "2", "--r", "0.70710678"]) == EXIT_OK
    solution = json.loads(capsys.readouterr().out)
    assert solution["s"] == pytest.approx(0.1715729, abs=1e-7)
    assert solution["s_complement"] == pytest.approx(0.9851744, abs=1e-7)
    assert solution["iterations"] >= 1


def test_usage_and_domain_errors(capsys):
    assert cli_main([]) == EXIT_USAGE
    assert cli_main(["eval", "--fn", "nope"]) == EXIT_USAGE
    assert cli_main(["eval", "--fn", "mu", "--a", "0.5"]) == EXIT_USAGE
    assert cli_main(["eval", "--fn", "mu", "--a", "0.7", "--r", "0.5"]) == EXIT_USAGE
    assert cli_main(["solve", "--a", "0.5", "--p", "2", "--K", "2", "--r", "0.5"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_help_exits_cleanly():
    assert cli_main(["--help"]) == EXIT_OK


def test_non_convergence_exit(mocker):
    mocker.patch("modular.phi_solution", side_effect=NonConvergenceError("stuck", iterations=80))
    assert cli_main(["solve", "--a", "0.5", "--K", "2", "--r", "0.5"]) == EXIT_NON_CONVERGENCE


def test_check_passes_and_writes_records(tmp_path, capsys):
    out = tmp_path / "records.csv"
    argv = ["check", "thm_1_7", "dK_dr", "lemma_2_10_gap", "--grid", "r=0.2:0.8:4", "--grid", "p=2,3",
            "--grid", "a=0.5", "--out", str(out)]
    assert cli_main(argv) == EXIT_OK
    summary = capsys.readouterr().out
    assert "thm_1_7" in summary and "dK_dr" in summary
    assert out.read_text().startswith("suite_id,index,inputs")


def test_check_failure_exit(mocker):
    mocker.patch("bounds.pi_p", return_value=100.0)
    assert cli_main(["check", "thm_1_7", "--grid", "p=3", "--grid", "r=0.2:0.8:4"]) == EXIT_FAILURE


def test_check_reports_non_convergence(mocker):
    mocker.patch("modular.mu_inv", side_effect=NonConvergenceError("stuck"))
    argv = ["check", "identity_1_3", "--grid", "a=0.5", "--grid", "K=2", "--grid", "r=0.3"]
    assert cli_main(argv) == EXIT_NON_CONVERGENCE


def test_check_usage_errors():
    assert cli_main(["check"]) == EXIT_USAGE
    assert cli_main(["check", "thm_9_9"]) == EXIT_USAGE
    assert cli_main(["check", "thm_1_7", "--grid", "r=0.9:0.1:3"]) == EXIT_USAGE
    assert cli_main(["check", "thm_1_7", "--format", "xml"]) == EXIT_USAGE


def test_check_list(capsys):
    assert cli_main(["check", "--list"]) == EXIT_OK
    listing = capsys.readouterr().out
    assert "identity_1_3" in listing and "thm_3_9_monotone" in listing and "deta_dK" in listing


def test_figure_to_stdout_and_file(tmp_path, capsys):
    assert cli_main(["figure", "1", "--grid", "r=0.5"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "r,thm17_upper,aq_upper,ellK"
    assert len(lines) == 2

    out = tmp_path / "fig.json"
    assert cli_main(["figure", "1", "--grid", "r=0.5", "--out", str(out), "--format", "json"]) == EXIT_OK
    assert json.loads(out.read_text())[0]["r"] == 0.5
    assert cli_main(["figure", "7"]) == EXIT_USAGE


def test_check_out_is_byte_identical_across_runs(tmp_path):
    first, second = tmp_path / "first.csv", tmp_path / "second.csv"
    for out in (first, second):
        assert cli_main(["check", "thm_1_9_2", "fig_2_crossover", "dphi_dr", "--grid", "a=0.2", "--grid", "K=2",
                         "--out", str(out)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_check_all_passes_every_registered_suite(tmp_path, capsys):
    out = tmp_path / "all.csv"
    code = cli_main(["check", "--all", "--out", str(out)])
    records = pd.read_csv(out, keep_default_na=False)
    failing = sorted(set(records.loc[records["verdict"] != "pass", "suite_id"]))
    assert failing == []
    assert (records["error"] == "").all()
    assert code == EXIT_OK

    summary = capsys.readouterr().out.splitlines()
    listed = Counter(line.split()[0] for line in summary[1:] if line.strip())
    assert set(listed) == set(SUITES)
    assert all(count == 1 for count in listed.values())
