import json
import subprocess
import sys

from dsetree import dse


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "dsetree.cli", *args],
        capture_output=True,
        text=True,
    )


def test_solve_matches_library():
    result = run_cli("solve", "--spec", "quadratic", "--order", "3")
    assert result.returncode == 0
    assert "c_3 = 4*((())) + 1*(()())" in result.stdout
    expected = dse.solve(dse.quadratic_spec(3)).text()
    assert result.stdout.strip() == expected


def test_solve_structured_output():
    result = run_cli("solve", "--spec", "linear", "--order", "2", "--format", "structured")
    assert result.returncode == 0
    dump = json.loads(result.stdout)
    assert dump["coefficients"][2]["terms"] == [{"coeff": "1", "forest": "(())"}]


def test_enumerate_stable_by_leaves():
    result = run_cli("enumerate", "--signature", "stable", "--by", "leaves", "--n", "4")
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert lines[-1] == "total: 11"
    assert len(lines) == 12


def test_enumerate_comb_trees():
    result = run_cli("enumerate", "--signature", "comb", "--n", "3")
    assert result.returncode == 0
    assert result.stdout.splitlines()[:2] == ["((()))", "(()())"]


def test_census_command():
    result = run_cli("census", "--signature", "binary", "--n", "3", "--format", "structured")
    assert result.returncode == 0
    assert json.loads(result.stdout) == {"((()))": 4, "(()())": 1}


def test_check_passing_law():
    result = run_cli("check", "--law", "coassoc", "--degree", "4")
    assert result.returncode == 0
    assert result.stdout.startswith("PASS (coassociativity")


def test_check_failing_law_exits_1():
    result = run_cli("check", "--law", "op-cocycle", "--signature", "binary", "--bound", "2")
    assert result.returncode == 1
    assert "FAIL" in result.stdout
    assert "b(|,|)" in result.stdout


def test_green_command():
    result = run_cli("green", "--signature", "binary", "--bound", "2")
    assert result.returncode == 0
    assert "g_1 = |" in result.stdout


def test_fold_demo_nat():
    result = run_cli("fold-demo", "--demo", "nat", "--n", "3")
    assert result.returncode == 0
    assert result.stdout.splitlines()[-1] == "s(s(s(|))) -> 3"


def test_usage_errors_exit_2():
    assert run_cli("solve", "--spec", "quadratic", "--order", "99").returncode == 2
    assert run_cli("solve", "--order", "2").returncode == 2  # missing --spec
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("solve", "--spec", "/nonexistent.json", "--order", "2").returncode == 2


def test_malformed_spec_file_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli("solve", "--spec", str(bad), "--order", "2").returncode == 2


def test_spec_file_accepted(tmp_path):
    doc = {"order": 2, "terms": [{"alpha_power": 1, "coeff": "1", "x_power": 1}]}
    path = tmp_path / "linear.json"
    path.write_text(json.dumps(doc))
    result = run_cli("solve", "--spec", str(path), "--order", "3")
    assert result.returncode == 0
    assert "c_3 = 1*((()))" in result.stdout


def test_signature_file_accepted(tmp_path):
    doc = {"ops": [{"name": "pair", "arity": 2}]}
    path = tmp_path / "sig.json"
    path.write_text(json.dumps(doc))
    result = run_cli("enumerate", "--signature", str(path), "--n", "2")
    assert result.returncode == 0
    assert "total: 2" in result.stdout


def test_outputs_are_deterministic():
    commands = [
        ("solve", "--spec", "geometric", "--order", "4"),
        ("enumerate", "--signature", "stable", "--by", "leaves", "--n", "4"),
        ("check", "--law", "antipode", "--degree", "3"),
    ]
    for cmd in commands:
        first = run_cli(*cmd)
        second = run_cli(*cmd)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode
