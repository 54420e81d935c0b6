import json
import subprocess
import sys

import pytest

from iwcontract.cli import run_cli


def test_verify_a2_all(capsys):
    assert run_cli(["verify", "--family", "A", "--rank", "2", "--suites", "all", "--seed", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "pass" and doc["seed"] == 7
    assert "nullcone" in doc["suites"]


def test_build_d2_is_usage_error(capsys):
    assert run_cli(["build", "--family", "D", "--rank", "2"]) == 3


def test_invariants_c2(tmp_path):
    out = tmp_path / "inv.json"
    assert run_cli(["invariants", "--family", "C", "--rank", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert [g["bidegree"] for g in doc["generators"]] == [[1, 1], [3, 1]]


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "A"],
    ["verify", "--family", "E", "--rank", "6"],
    ["frobnicate", "--family", "A", "--rank", "2"],
    ["verify", "--family", "A", "--rank", "2", "--suites", "bogus"],
    ["verify", "--family", "A", "--rank", "2", "--samples", "0"],
    ["verify", "--family", "A", "--rank", "2", "--fam", "A"],
    ["verify", "--family", "B", "--rank", "2", "--suites", "nullcone"],
])
def test_usage_errors(argv, capsys):
    assert run_cli(argv) == 3
    assert "error" in capsys.readouterr().err


def test_build_and_index(capsys):
    assert run_cli(["build", "--family", "B", "--rank", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["labels"]) == 10
    assert run_cli(["index", "--family", "C", "--rank", "3"]) == 0


def test_output_is_byte_deterministic(tmp_path, monkeypatch):
    argv = ["verify", "--family", "B", "--rank", "2", "--seed", "5", "--out"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(argv + [str(a)]) == 0
    monkeypatch.setenv("IWCONTRACT_THREADS", "3")
    assert run_cli(argv + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "iwcontract", "index", "--family", "A", "--rank", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
