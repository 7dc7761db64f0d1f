import json

import pytest

from src.cli import EXIT_BOUND, EXIT_INPUT, EXIT_NOT_DOMINATED, EXIT_OK, build_parser, main
from tests.conftest import market_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_eb(capsys):
    code, out, _ = run_cli(capsys, "solve", market_path("eb"))
    assert code == EXIT_OK
    assert "stable schedule matching (2 pivots):" in out
    assert "t({x5c}) = 1/2    [f1]" in out
    assert "t({z1,z2}) = 1    [f2]" in out
    assert "matching: {z1,z2}" in out
    assert "stable: yes" in out


def test_solve_without_dominating_matching(capsys):
    code, _, err = run_cli(capsys, "solve", market_path("m2"))
    assert code == EXIT_NOT_DOMINATED
    assert "not concave" in err


def test_solve_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "solve", market_path("eb"))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["matching"] == "{z1,z2}"
    assert report["stable"] is True
    assert report["pivots"] == 2
    assert {"firm": "f1", "assignment": "{x5c}", "share": "1/2"} in report["schedule"]


def test_trace_eb(capsys):
    code, out, _ = run_cli(capsys, "trace", market_path("eb"))
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "step 0 A=[f1 f2 w1 w2] C=[f2 w1 w2 {z1,z2}]"
    assert "b = (3,1,0,0,0,0,1/2,1,0)" in lines


def test_trace_with_reversed_ordering_and_start_row(capsys):
    code, out, _ = run_cli(capsys, "--reverse-l", "--row", "w2", "trace", market_path("eb"))
    assert code == EXIT_OK
    assert out.startswith("step 0 ")


def test_unknown_start_row(capsys):
    code, _, err = run_cli(capsys, "--row", "nobody", "trace", market_path("eb"))
    assert code == EXIT_INPUT
    assert "nobody" in err


def test_check_stable(capsys):
    code, out, _ = run_cli(capsys, "check-stable", market_path("eb"), "{z1,z2}")
    assert code == EXIT_OK
    assert "stable: yes" in out

    code, out, _ = run_cli(capsys, "check-stable", market_path("eb"), "z2")
    assert code == EXIT_OK
    assert "stable: no" in out
    assert "blocked by" in out


def test_stable_set(capsys):
    code, out, _ = run_cli(capsys, "stable-set", market_path("eb"))
    assert code == EXIT_OK
    assert out.splitlines() == ["{z1,z2}", "1 stable of 16 matchings"]


def test_check_concave(capsys):
    code, out, _ = run_cli(capsys, "check-concave", market_path("m2"))
    assert code == EXIT_OK
    assert "concave: no" in out
    assert "support: f1:{a1,a2} f2:{b1} f2:{b2}" in out
    assert "full matched: f2 w1 w2" in out

    code, out, _ = run_cli(capsys, "check-concave", "--pi", market_path("m4_pi"))
    assert code == EXIT_OK
    assert "concave: yes" in out


def test_check_schedule(capsys):
    code, out, _ = run_cli(capsys, "check-schedule", market_path("eb"), "{x5c}=1/2 {z1,z2}=1")
    assert code == EXIT_OK
    assert "feasible: yes" in out
    assert "stable: yes" in out

    code, out, _ = run_cli(capsys, "check-schedule", market_path("eb"), "{z1,z2}=2")
    assert code == EXIT_OK
    assert "feasible: no" in out


def test_deferred_acceptance(capsys):
    code, out, _ = run_cli(capsys, "da", market_path("teams"))
    assert code == EXIT_OK
    assert "matching: {f1l2,f1o2,f1o3,f2l1,f2o1}" in out
    assert "stable: yes" in out


def test_team_commands_need_a_structure(capsys):
    code, _, err = run_cli(capsys, "da", market_path("eb"))
    assert code == EXIT_INPUT
    assert "leaders" in err


def test_round(capsys):
    code, out, _ = run_cli(capsys, "round", market_path("teams"), "{f1l1,f1o1}=1/2 {f2l1,f2o1}=1/2")
    assert code == EXIT_OK
    assert "dominates: yes" in out


def test_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "solve", str(tmp_path / "absent.market"))
    assert code == EXIT_INPUT
    assert "cannot read" in err


def test_enumeration_bound(capsys, tmp_path):
    config = tmp_path / "tiny.yaml"
    config.write_text("enumeration:\n  default:\n    max_matchings: 5\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "--config", str(config), "stable-set", market_path("eb"))
    assert code == EXIT_BOUND
    assert "Resource bound exceeded" in err


def test_subcommand_is_required():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_solve_market_without_acceptable_assignments(capsys):
    code, out, _ = run_cli(capsys, "solve", market_path("empty"))
    assert code == EXIT_OK
    assert "matching: empty" in out
    assert "stable: yes" in out
