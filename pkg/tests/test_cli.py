import io
import json
import subprocess
import sys

import pytest

from weylorder import cli, verify
from weylorder.rewrite import normal_order, normal_order_q
from weylorder.words import parse_word

from .conftest import WORKED_WORD


def call(*argv, environ=None):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err, environ or {})
    return code, out.getvalue(), err.getvalue()


def test_normal_order_text():
    code, out, _ = call("normal-order", WORKED_WORD)
    assert code == 0
    assert out.splitlines() == ["offset: 0", "k  coefficient", "3  2", "4  4", "5  1"]


@pytest.mark.parametrize("word", [WORKED_WORD, "DDxxx", "(x^2D)^3", "D"])
@pytest.mark.parametrize("q", [False, True])
def test_normal_order_json_round_trip(word, q):
    argv = ["--format", "json", "normal-order", word] + (["--q"] if q else [])
    code, out, _ = call(*argv)
    assert code == 0
    nf = cli.normal_form_from_json(json.loads(out))
    expected = (normal_order_q if q else normal_order)(parse_word(word))
    assert nf == expected


def test_csv_and_stirling_methods():
    outs = set()
    for method in ("rewrite", "graph-g", "graph-h", "rook", "closed"):
        code, out, _ = call("--format", "csv", "stirling", WORKED_WORD, "--method", method)
        assert code == 0
        outs.add(out)
    assert outs == {"k,S\n3,2\n4,4\n5,1\n"}
    code, out, _ = call("--format", "json", "stirling", "--method", "summation", "--n", "2", "--s", "2", "--k", "3")
    assert json.loads(out) == [{"k": "3", "S": "4"}]


def test_graph_outputs():
    code, out, _ = call("graph", WORKED_WORD, "--which", "h", "--format", "json")
    assert code == 0
    assert json.loads(out)["n"] == 5
    code, out, err = call("graph", "Dx")
    assert code == 0 and out.startswith("graph G {") and "associated Dyck" in err
    code, out, _ = call("graph", "--which", "gnr", "--n", "2", "--r", "2", "--format", "json")
    assert json.loads(out)["edges"] == [[1, 2], [1, 3], [1, 4], [3, 4]]
    assert call("graph", "--which", "hnr")[0] == 1


def test_forests_and_bijection():
    code, out, _ = call("--format", "json", "forests", "--r", "2", "--n", "3", "--k", "1")
    assert json.loads(out)[0]["count"] == "6"
    code, out, _ = call("--format", "json", "forests", "--r", "2", "--n", "3", "--k", "1", "--list")
    assert len(json.loads(out)) == 6
    for which in ("g", "h"):
        code, out, _ = call("bijection", "--which", which, "--r", "3", "--n", "3", "--k", "2", "--check-roundtrip")
        assert code == 0 and "FAIL" not in out


def test_qtable():
    code, out, _ = call("qtable", WORKED_WORD)
    assert code == 0
    for line in out.splitlines()[1:]:
        cols = line.split("  ")
        cols = [c.strip() for c in cols if c.strip()]
        assert cols[1] == cols[2]
    code, out, _ = call("--seed", "9", "qtable", WORKED_WORD, "--order", "random")
    assert code == 0
    code, _, err = call("qtable", "Dx")
    assert code == 1 and "Dyck" in err
    code, out, _ = call("--format", "csv", "qtable", "--carlitz", "3")
    assert "3,2,2*q + q^2" in out.splitlines()


def test_bell_and_fcoeff():
    assert call("bell", "--n", "5")[1].splitlines()[1].split() == ["5", "52"]
    assert call("bell", "(x^2D^2)^3")[1].split()[-1] == "87"
    code, out, _ = call("--format", "csv", "fcoeff", "--n", "2", "--s", "3")
    assert out == "l,f\n0,1\n1,3\n2,2\n"
    for method in ("genfunc", "stirling1"):
        assert call("--format", "csv", "fcoeff", "--method", method, "--n", "2", "--s", "3")[1] == out


def test_verify_ok_and_failure(monkeypatch):
    code, out, _ = call("verify", "--all-dyck", "--max-len", "8")
    assert code == 0 and out.strip() == "OK (22 words checked)"
    assert call("verify", "--word", "DxxD")[0] == 0
    real = verify.five_way

    def broken(w, **kw):
        table = real(w, **kw)
        table["rook"][-1] += 1
        return table

    monkeypatch.setattr(verify, "five_way", broken)
    code, _, err = call("verify", "--word", "xD")
    assert code == 3
    assert "'xD'" in err and "k=1" in err


@pytest.mark.parametrize("argv, code", [
    (["normal-order", "xQ"], 1),
    (["nosuch"], 1),
    (["stirling", "--method", "closed"], 1),
    (["verify"], 1),
    (["--max-word-length", "0", "normal-order", "x"], 1),
    (["--max-word-length", "5", "normal-order", "x^6"], 2),
    (["--step-budget", "5", "normal-order", "(Dx)^5"], 2),
    (["--max-enum", "3", "stirling", WORKED_WORD, "--method", "graph-g"], 2),
    (["forests", "--r", "2", "--n", "9", "--k", "1", "--list"], 2),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_env_bound():
    argv = ["stirling", WORKED_WORD, "--method", "graph-h"]
    assert call(*argv, environ={"WEYLORDER_MAX_ENUM": "4"})[0] == 2
    assert call(*argv, environ={"WEYLORDER_MAX_ENUM": "x"})[0] == 1
    assert call("--max-enum", "5", *argv, environ={"WEYLORDER_MAX_ENUM": "4"})[0] == 0


def test_config_validation():
    with pytest.raises(ValueError):
        cli.Config(output_format="xml")
    with pytest.raises(ValueError):
        cli.Config(rewrite_step_budget=0)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylorder.cli", "normal-order", "Dx"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "1  1"
