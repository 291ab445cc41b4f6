import json
import subprocess
import sys

import pytest

from linkinv.cli import main
from linkinv.poly import parse_t

UNKNOT_PD = "link unknot components 1\ncomp 1: 1\n"


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_jones_family(capsys):
    rc, out, _ = run(capsys, "invariant", "jones", "--family", "Wn(B3):n=2,sign=-")
    assert rc == 0
    assert parse_t(out.strip()).deg_lo_t() == -6


def test_det_family(capsys):
    rc, out, _ = run(capsys, "invariant", "det", "--family", "L(m=3)")
    assert rc == 0 and out.splitlines()[0] == "0"


def test_jones_pd_file(tmp_path, capsys):
    f = tmp_path / "unknot.pd"
    f.write_text(UNKNOT_PD)
    rc, out, _ = run(capsys, "invariant", "jones", "--pd", str(f))
    assert rc == 0 and out.strip() == "1"


def test_json_and_latex(capsys):
    rc, out, _ = run(capsys, "invariant", "jones", "--family", "L3", "--format", "json")
    data = json.loads(out)
    assert rc == 0 and data["invariant"] == "jones" and "value" in data["result"]
    rc, out, _ = run(capsys, "invariant", "jones", "--family", "L3", "--format", "latex")
    assert "\\frac{9}{2}" in out


def test_cache_used(capsys):
    run(capsys, "invariant", "signature", "--family", "trefoil")
    rc, out, _ = run(capsys, "cache", "stats", "--format", "json")
    assert json.loads(out)["keys"] == 1
    rc, out, _ = run(capsys, "invariant", "signature", "--family", "trefoil", "--no-cache")
    assert out.strip() == "-2"
    run(capsys, "cache", "clear")
    rc, out, _ = run(capsys, "cache", "stats", "--format", "json")
    assert json.loads(out)["keys"] == 0


def test_other_invariants(capsys):
    assert run(capsys, "invariant", "colorings", "--family", "trefoil", "--mod", "3")[1].strip() == "0 2 1"
    assert "not 5-colorable" in run(capsys, "invariant", "colorings", "--family", "trefoil", "--mod", "5")[1]
    rc, out, _ = run(capsys, "invariant", "milnor", "--family", "B3", "--q", "3")
    assert rc == 0 and "mu(123)" in out
    rc, out, _ = run(capsys, "invariant", "milnor", "--family", "unlink:m=2", "--q", "3")
    assert "vanish" in out


def test_parse_error_line_number(tmp_path, capsys):
    f = tmp_path / "bad.pd"
    f.write_text("link k components 1\ncomp 1: 1 2\nX(1,2\n")
    rc, _, err = run(capsys, "invariant", "jones", "--pd", str(f))
    assert rc == 2 and "line 3" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["invariant", "jones", "--family", "Nope"],
        ["invariant", "jones"],
        ["invariant", "jones", "--pd", "/nonexistent.pd"],
        ["invariant", "jones", "--family", "Wkn13:k=3,n=3", "--budget", "10", "--no-cache"],
        ["invariant", "milnor", "--family", "B3", "--q", "1"],
    ],
)
def test_errors_exit_2(argv, capsys):
    assert run(capsys, *argv)[0] == 2


def test_family_gen_and_list(capsys):
    rc, out, _ = run(capsys, "family", "gen", "B3")
    assert rc == 0 and out.startswith("link")
    rc, out, _ = run(capsys, "family", "gen", "L3", "--format", "json")
    assert "A" in json.loads(out)["markers"]
    rc, out, _ = run(capsys, "family", "list")
    assert "brunnian" in out.split()


def test_double(tmp_path, capsys):
    rc, out, _ = run(capsys, "double", "--family", "trefoil", "--n", "2")
    assert rc == 0 and "clasp crossing" in out
    f = tmp_path / "w.pd"
    f.write_text(out)
    rc, out, _ = run(capsys, "invariant", "det", "--pd", str(f))
    assert rc == 0


@pytest.mark.parametrize("suite", ["values", "skein", "chain", "degrees"])
def test_verify_passing_suites(suite, capsys):
    rc, out, _ = run(capsys, "verify", suite)
    assert rc == 0 and out.rstrip().endswith(")") and "PASS" in out.splitlines()[-1]


def test_verify_json(capsys):
    rc, out, _ = run(capsys, "verify", "chain", "--format", "json")
    data = json.loads(out)
    assert data["passed"] and data["suite"] == "chain"


def test_verify_all_is_deterministic(tmp_path):
    env_cmd = [sys.executable, "-m", "linkinv.cli", "verify", "all", "--format", "json"]
    outs = [subprocess.run(env_cmd, capture_output=True, text=True) for _ in range(2)]
    assert outs[0].stdout == outs[1].stdout
    # exit code mirrors the summary
    assert outs[0].returncode == (0 if json.loads(outs[0].stdout)["passed"] else 1)
