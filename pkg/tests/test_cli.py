import io
import json
import subprocess
import sys

import pytest

from jacklab import jack
from jacklab.cli import cli_main


def run(*argv):
    out = io.StringIO()
    code = cli_main(list(argv), out=out)
    return code, out.getvalue()


def test_coeff_a():
    assert run("coeff", "--mu", "2", "--lambda", "2", "--basis", "a") == (0, "0, 2, 0\n")


def test_coeff_b_and_poly():
    # b listed by falling-factorial degree k = 1..n
    assert run("coeff", "--mu", "2", "--lambda", "2", "--basis", "b") == (0, "2, 1\n")
    code, out = run("coeff", "--mu", "1,1", "--lambda", "1,1", "--basis", "poly")
    assert code == 0 and out.strip() == "2*α^2"


def test_coeff_grid_csv():
    code, out = run("coeff", "--n", "3", "--basis", "a", "--csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "mu,lambda,a0,a1,a2,a3"
    assert len(lines) == 1 + 9


def test_expand():
    assert run("expand", "--mu", "1,1", "--basis", "m", "--tilde") == (0, "2*α^2*m_(1,1)\n")
    code, out = run("expand", "--mu", "2", "--basis", "s", "--tilde", "--json")
    data = json.loads(out)
    assert code == 0 and data["basis"] == "s" and data["degree"] == 2
    code, out = run("expand", "--mu", "2,1", "--basis", "qsym")
    assert code == 0 and "Q_" in out


def test_verify_exit_codes_and_formats():
    assert run("verify", "prop4", "--n", "3")[0] == 0
    code, out = run("verify", "thm5", "--n", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["check"] == "thm5" and data["passed"] and data["witness"] is None
    code, out = run("verify", "gjw", "--n", "3", "--csv")
    assert code == 0 and out.startswith("check,n,inputs,verdict")


def test_verify_all_small():
    code, out = run("verify", "all", "--n", "3")
    assert code == 0
    assert out.count("PASS") == len(out.strip().splitlines())


def test_verify_failure_exit_code(monkeypatch):
    from jacklab import verify

    chk = verify.REGISTRY["diag"]
    bad = verify.Check("diag", lambda n: [verify.Case({"n": n}, "fail", {"why": "forced"})], "", 3, 8, 9)
    monkeypatch.setitem(verify.REGISTRY, "diag", bad)
    assert run("verify", "diag", "--n", "3")[0] == 1
    monkeypatch.setitem(verify.REGISTRY, "diag", chk)


def test_internal_error_exit_code(monkeypatch):
    from jacklab import cli
    from jacklab.errors import InternalInconsistencyError

    def boom(*a, **k):
        raise InternalInconsistencyError("forced")

    monkeypatch.setitem(cli._COMMANDS, "checks", boom)
    assert run("checks")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["verify", "nope"],
        ["coeff", "--mu", "2"],
        ["expand", "--mu", "1,2"],
        ["coeff", "--mu", "2", "--lambda", "1,1,1"],
        ["verify", "conj1", "--n", "8"],
        ["enumerate", "qyt"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_enumerate():
    code, out = run("enumerate", "qyt", "--shape", "2,2,1")
    assert code == 0 and "{3: 3, 4: 2}" in out
    code, out = run("enumerate", "syt", "--n", "3")
    assert code == 0 and len(out.strip().splitlines()) == 3
    code, out = run("enumerate", "boards", "--lambda", "3,2")
    assert code == 0 and "[2, 2, 2, 3, 3]" in out
    code, out = run("enumerate", "boards", "--hook", "4,1")
    assert code == 0 and "[1, 1, 2, 3]" in out and "[2, 2, 2, 3]" in out


def test_checks_listing():
    code, out = run("checks")
    assert code == 0 and "gjw" in out and "conj13" in out


def test_cache_flag(tmp_path):
    assert run("--cache", str(tmp_path), "expand", "--mu", "3,2")[0] == 0
    assert (tmp_path / "J_n5_3-2.json").exists()
    assert jack._cache_dir is None


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "jacklab", "coeff", "--mu", "2", "--lambda", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "0, 2, 0"
