import json
import subprocess
import sys

import pytest

from crystal_cauchy.cli import main
from crystal_cauchy.matrices import parse_matrix
from crystal_cauchy.plpath import PLPath
from crystal_cauchy.words import Tableau


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_character_example(capsys):
    code, out, _ = run(capsys, "character", "--lambda", "2,0", "--w", "2,1")
    assert code == 0 and out.strip() == "x1^2 + x1*x2 + x2^2"


def test_verify_cauchy_example(capsys):
    code, out, _ = run(capsys, "verify-cauchy", "--n", "2", "--degree", "4", "--variant", "lower_KhatK")
    assert code == 0 and out.strip().endswith("ok")


def test_rsk_example(capsys):
    code, data = run_json(capsys, "rsk", "--matrix", "0,0;1,0")
    assert code == 0
    assert Tableau.from_json(data["P"]).rows == ((2,),)
    assert Tableau.from_json(data["Q"]).rows == ((1,),)
    assert parse_matrix(json.dumps(data["matrix"])) == ((0, 0), (1, 0))


def test_enumerate_and_classify(capsys):
    code, data = run_json(capsys, "enumerate", "--lambda", "2,0", "--w", "21", "--kind", "atom")
    assert code == 0 and data["count"] == 2
    assert {Tableau.from_json(e).rows for e in data["elements"]} == {((1, 2),), ((2, 2),)}
    code, data = run_json(capsys, "classify", "--matrix", "0,0;0,1")
    assert code == 0 and data["w"] == "21" and data["lambda"] == [1, 0]


def test_path_command(capsys):
    code, data = run_json(capsys, "path", "--word", "21", "--n", "2")
    assert code == 0
    assert data["iota"] == ["0", "2"] and data["tau"] == ["2", "0"]
    assert PLPath.from_json(data["plpath"]).endpoint == (1, 1)
    code, again = run_json(capsys, "path", "--tableau", "[[1,2]]", "--n", "2")
    assert again == data


def test_continuous_check(capsys):
    code, data = run_json(capsys, "continuous-check", "--matrix", "1/2,0;1/3,0")
    assert code == 0 and data["ok"] and data["lambda"] == ["5/6", "0"]
    code, data = run_json(capsys, "continuous-check", "--n", "3", "--trials", "5", "--seed", "3")
    assert code == 0 and data == {"trials": 5, "ok": True, "failures": []}


def test_littlewood_command(capsys):
    code, data = run_json(capsys, "verify-littlewood", "--n", "2", "--degree", "4")
    assert code == 0 and data["ok"]


def test_lower_runs_both_forms(capsys):
    code, data = run_json(capsys, "verify-cauchy", "--n", "2", "--degree", "2")
    assert code == 0
    assert [d["variant"] for d in data] == ["lower_KhatK", "lower_KKhat"]


@pytest.mark.parametrize("argv", [
    ["character", "--lambda", "0,2"],
    ["character", "--lambda", "2,0", "--w", "3,1,2"],
    ["enumerate", "--lambda", "1,1,0", "--w", "2,1,3", "--kind", "atom"],
    ["rsk", "--matrix", "1,2;3"],
    ["continuous-check", "--matrix", "0,1;0,0"],
    ["verify-cauchy", "--n", "2", "--degree", "-2"],
    ["path", "--word", "21", "--tableau", "[[1,2]]"],
    ["no-such-command"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_tamper_exits_1(capsys):
    code, data = run_json(capsys, "verify-all", "--max-n", "2", "--max-degree", "2", "--tamper")
    assert code == 1 and not data["ok"]


def test_verify_all_trivial(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-n", "0")
    assert code == 0 and out.strip().endswith("ok")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "char.json"
    code, out, _ = run(capsys, "character", "--lambda", "1,0", "--format", "json", "--out", str(target))
    assert code == 0
    assert target.read_text() == out
    assert json.loads(out)


def test_seeded_output_is_reproducible():
    argv = [sys.executable, "-m", "crystal_cauchy.cli", "continuous-check", "--n", "2", "--trials", "20",
            "--seed", "7", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
