import json

import pytest
from click.testing import CliRunner

from braidseed.cli import main
from braidseed.seedbuild import build_seed, seed_from_dict
from braidseed.rootsys import parse_type


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_seed_json():
    r = run("seed", "--type", "A1", "--word", "1 1 1", "--format", "json")
    assert r.exit_code == 0, r.output
    assert '"B":[[0],[1]]' in r.output.replace(" ", "")
    s = seed_from_dict(json.loads(r.output))
    assert s.B == build_seed(parse_type("A1"), (1, 1, 1)).B


def test_seed_empty_and_text():
    r = run("seed", "--type", "A2", "--word", "1 2 1")
    assert r.exit_code == 0
    assert json.loads(r.output)["mutable"] == []
    r = run("seed", "--type", "A1", "--word", "1")
    assert r.exit_code == 0
    r = run("seed", "--type", "A1", "--word", "1 1 1", "--format", "text")
    assert "really full rank: True" in r.output


def test_seed_dot_and_output(tmp_path):
    out = tmp_path / "s.dot"
    r = run("seed", "--type", "A2", "--word", "1 2 1 2 1", "--format", "dot", "-o", str(out))
    assert r.exit_code == 0
    assert out.read_text().startswith("digraph")


def test_exit_codes():
    r = run("seed", "--type", "A2", "--word", "1 2")
    assert r.exit_code == 2 and "Demazure" in r.output
    assert run("seed", "--type", "A2", "--word", "1 3").exit_code == 1
    assert run("seed", "--type", "X9", "--word", "1").exit_code == 1
    assert run("mutate", "--type", "A1", "--word", "1 1 1", "--seq", "1").exit_code == 1


def test_fold_check_flag():
    r = run("seed", "--type", "G2", "--word", "1 2 1 2 1 2 1", "--fold-check")
    assert r.exit_code == 0 and "fold-check: pass" in r.output


def test_mutate():
    r = run("mutate", "--type", "A1", "--word", "1 1 1", "--seq", "2")
    assert r.exit_code == 0
    assert json.loads(r.output)["B"] == [[0], [-1]]
    r2 = run("mutate", "--type", "A1", "--word", "1 1 1", "--seq", "mu(2,2)")
    assert json.loads(r2.output)["B"] == [[0], [1]]


def test_moves():
    r = run("moves", "--type", "A2", "--word", "1 2 1 2", "--list")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert lines and all(len(line.split("\t")) == 3 for line in lines)
    r = run("moves", "--type", "A2", "--word", "1 2 1 2", "--move", "B3@1")
    plan = json.loads(r.output)
    assert plan["target"] == "2 1 2 2"
    r = run("moves", "--type", "A2", "--word", "1 2 1 2", "--move", "B3@1", "--verify")
    assert r.exit_code == 0 and json.loads(r.output)["passed"]
    r = run("moves", "--type", "A2", "--word", "1 1 2 1 1", "--conjugate")
    assert r.exit_code == 0 and "target" in json.loads(r.output)


def test_fold():
    r = run("fold", "--type", "C2", "--word", "1 2 1 2 2", "--lift")
    data = json.loads(r.output)
    assert data["lifted"] == "1 3 2 1 3 2 2"
    assert data["lambda"] == [1, 1, 2, 3, 3, 4, 5]
    r = run("fold", "--type", "G2", "--word", "1 2 1 2 1 2 2")
    assert r.exit_code == 0 and json.loads(r.output)["passed"]


@pytest.mark.parametrize("args", [
    ("--oracle", "--type", "A2", "--max-len", "5"),
    ("--moves", "--type", "B2", "--max-len", "5"),
    ("--fold", "--type", "G2", "--max-len", "7"),
    ("--aps", "--rank", "--type", "C2", "--samples", "30", "--max-len", "9"),
])
def test_verify(args):
    r = run("verify", *args)
    assert r.exit_code == 0, r.output
    summary = json.loads(r.output)["suites"]
    assert all(v["failures"] == 0 and v["words"] > 0 for v in summary.values())


def test_verify_oracle_needs_type_a():
    assert run("verify", "--oracle", "--type", "B2", "--max-len", "4").exit_code == 1


def test_byte_identical():
    a = run("seed", "--type", "B3", "--word", "1 3 2 3 1 2 3 1 2 3").output
    b = run("seed", "--type", "B3", "--word", "1 3 2 3 1 2 3 1 2 3").output
    assert a == b
    a = run("verify", "--aps", "--type", "A2", "--samples", "20", "--seed", "3", "--max-len", "8").output
    b = run("verify", "--aps", "--type", "A2", "--samples", "20", "--seed", "3", "--max-len", "8").output
    assert a == b
