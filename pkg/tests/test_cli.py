import json
import os
import subprocess
import sys

import pytest

from qflag import cli
from qflag.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["product", "--n", "3", "--u", "213", "--v", "213"], "sigma[312] + q1·sigma[123]"),
    (["product", "--n", "3", "--u", "123", "--v", "321"], "sigma[321]"),
    (["product", "--n", "2", "--u", "21", "--v", "21"], "q1·sigma[12]"),
    (["product", "--n", "3", "--u", "213", "--v", "321"], "q1·sigma[231] + q1*q2·sigma[123]"),
    (["quantize", "--n", "3", "--w", "312"], "x1^2 - q1"),
])
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("via", ["chevalley", "presentation", "both"])
def test_product_routes_json(capsys, via):
    code, out, _ = run(capsys, "product", "--n", "3", "--u", "213", "--v", "213", "--via", via,
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "qflag/1"
    assert doc["result"] == {"312": "1", "123": "q1"}
    assert ("match" in doc) == (via == "both")


def test_word_input(capsys):
    a = run(capsys, "product", "--n", "3", "--u", "1", "--v", "21", "--word")
    b = run(capsys, "product", "--n", "3", "--u", "213", "--v", "312")
    assert a == b
    code, _, err = run(capsys, "product", "--n", "3", "--u", "11", "--v", "1", "--word")
    assert code == 64 and "not reduced" in err


def test_tables(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--what", "schubert")
    assert code == 0 and json.loads(out)["table"] == {"12": "1", "21": "x1"}
    code, out, _ = run(capsys, "table", "--n", "3", "--what", "qgiambelli")
    assert json.loads(out)["table"]["312"] == "x1^2 - q1"
    code, out, _ = run(capsys, "table", "--n", "3", "--what", "omega")
    mats = json.loads(out)["omega"]
    assert sorted(mats) == ["1", "2"]
    assert all(len(m) == 6 and all(len(r) == 6 for r in m) for m in mats.values())


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "degree2", "--type", "B2"],
    ["verify", "--suite", "degree2", "--type", "[[2,-1],[-3,2]]"],
    ["verify", "--suite", "flatness", "--n", "4"],
    ["verify", "--suite", "flatness", "--type", "G2"],
    ["verify", "--suite", "heisenberg", "--n", "3"],
    ["verify", "--suite", "quantization", "--n", "3"],
    ["verify", "--suite", "classical-limit", "--type", "A2"],
])
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.startswith("PASS")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "heisenberg", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] is True and doc["failures"] == []
    assert doc["schema"] == "qflag/1" and doc["conventions"]


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "bogus", "--n", "3"],
    ["verify", "--suite", "heisenberg", "--type", "B2"],
    ["verify", "--suite", "degree2", "--type", "[[2,-3],[-3,2]]"],
    ["verify", "--suite", "degree2"],
    ["verify", "--suite", "degree2", "--n", "3", "--type", "A2"],
    ["product", "--n", "3", "--u", "1234", "--v", "123"],
    ["product", "--n", "3", "--u", "113", "--v", "123"],
    ["product", "--n", "9", "--u", "1", "--v", "1"],
    ["table", "--n", "1", "--what", "schubert"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 64
    assert "error" in err


def test_argparse_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["product", "--n", "3"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 64


def test_max_n_env(capsys, monkeypatch):
    monkeypatch.setenv("QFLAG_MAX_N", "3")
    code, _, err = run(capsys, "table", "--n", "4", "--what", "schubert")
    assert code == 64 and "QFLAG_MAX_N" in err
    monkeypatch.setenv("QFLAG_MAX_N", "lots")
    assert run(capsys, "table", "--n", "2", "--what", "schubert")[0] == 64


def test_failed_verification_exits_1(capsys, monkeypatch):
    def broken(*a, **k):
        r = Report("heisenberg", "n=2")
        r.checks = 1
        r.fail(family="commuting", lhs="x", rhs="0")
        return r
    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "heisenberg", "--n", "2")
    assert code == 1
    assert out.startswith("FAIL") and "commuting" in out


def test_route_mismatch_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "quantum_product_chevalley", lambda u, v, n: {})
    code, out, err = run(capsys, "product", "--n", "2", "--u", "21", "--v", "21")
    assert code == 2
    doc = json.loads(out)
    assert doc["match"] is False and doc["routes"]["chevalley"] == {}
    assert "disagree" in err


def test_deterministic_bytes():
    argv = [sys.executable, "-m", "qflag.cli", "table", "--n", "3", "--what", "omega"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True, env={**os.environ, "PYTHONHASHSEED": "7"}).stdout
    assert a == b and a
