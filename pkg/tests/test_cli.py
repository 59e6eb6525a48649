import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as Fr

import pytest
from hypothesis import given

from conftest import G_STAR, X0, p_elements
from plgroup.cli import main
from plgroup.plmap import PLHomeo


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def x0_file(tmp_path):
    p = tmp_path / "x0.json"
    p.write_text(X0.to_json())
    return str(p)


def test_alpha_of_x0(x0_file):
    assert run(["invariant", "alpha", x0_file]) == (0, "(-1, 1)\n", "")


def test_beta_pipeline():
    code, out, _ = run(["construct", "beta", "--k", "3"])
    assert code == 0
    assert run(["invariant", "beta"], out)[1] == "3\n"


def test_gamma_and_info_pipelines(x0_file):
    code, out, _ = run(["construct", "gamma", "--target", x0_file])
    assert run(["invariant", "gamma"], out)[1].strip() == X0.to_json()
    code, out, err = run(["construct", "info", "--mode", "PQ", "--target", x0_file])
    basepoint = err.split()[-1]
    assert run(["invariant", "info", "--mode", "P", "--basepoint", basepoint], out)[1].strip() == X0.to_json()


def test_pa_mode(tmp_path):
    code, out, _ = run(["construct", "beta", "--mode", "Pa", "--base", "3/2", "--k", "5/6"])
    assert code == 0
    assert run(["invariant", "beta", "--mode", "Pa", "--base", "3/2"], out)[1] == "5/6\n"


def test_group_operations(x0_file):
    code, inv, _ = run(["invert", x0_file])
    assert PLHomeo.from_json(inv) == G_STAR
    code, out, _ = run(["compose", "-", x0_file], inv)
    assert PLHomeo.from_json(out).is_identity()
    both = json.dumps([X0.to_dict(), G_STAR.to_dict()])
    expected = G_STAR.__class__.from_json(run(["compose"], json.dumps([G_STAR.to_dict(), X0.to_dict()]))[1])
    expected = PLHomeo.from_json(run(["compose"], json.dumps([expected.to_dict(), X0.to_dict()]))[1])
    assert PLHomeo.from_json(run(["conjugate"], both)[1]) == expected  # g h g^-1 with g^-1 = x0
    assert run(["eval", x0_file, "--at", "7/8"])[1] == "3/4\n"


def test_error_codes(x0_file, tmp_path):
    code, out, err = run(["invariant", "beta", x0_file])
    assert code == 1 and err.startswith("error E_PRECONDITION:")
    assert run(["invariant", "alpha", x0_file, "--mode", "Pa"])[2].startswith("error E_BASE")
    assert run(["invariant", "alpha", x0_file, "--mode", "Pa", "--base", "1"])[2].startswith("error E_BASE")
    assert run(["invariant", "alpha", x0_file, "--base", "2"])[0] == 1
    assert run(["eval", x0_file, "--at", "0.5"])[2].startswith("error E_RATIONAL")
    assert run(["invert"], "{oops")[2].startswith("error E_JSON")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"breakpoints": [["0", "0"], ["1/2", "1/2"], ["1", "1"]]}))
    assert run(["invert", str(bad)])[2].startswith("error E_CANONICAL")
    assert run(["bogus"])[2].startswith("error E_USAGE")
    assert run(["compose", "--mode", "F"], json.dumps([X0.to_dict(), PLHomeo([(0, 0), (Fr(1, 3), Fr(2, 3)), (1, 1)]).to_dict()]))[2].startswith("error E_MEMBERSHIP")


def test_check_member(x0_file, tmp_path):
    assert run(["check-member", "--mode", "F", x0_file])[:2] == (0, "true\n")
    third = tmp_path / "t.json"
    third.write_text(PLHomeo([(0, 0), (Fr(1, 3), Fr(2, 3)), (1, 1)]).to_json())
    assert run(["check-member", "--mode", "F", str(third)])[:2] == (2, "false\n")
    assert run(["check-member", "--mode", "Pa", "--base", "2", str(third)])[0] == 0


def test_sample_csv(x0_file, tmp_path):
    target = tmp_path / "s.csv"
    assert run(["sample", x0_file, "--points", "33", "--csv", str(target), "--precision", "6"])[0] == 0
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == 33
    xs = [Fr(r["x_exact"]) for r in rows]
    ys = [Fr(r["fx_exact"]) for r in rows]
    assert xs == sorted(xs) and ys == sorted(ys)
    assert rows[16]["fx"] == "0.250000" and rows[16]["fx_exact"] == "1/4"


def test_verify_exit_codes():
    code, out, _ = run(["verify", "--suite", "beta", "--seed", "7", "--cases", "10", "--json"])
    assert code == 0 and json.loads(out)["failures"] == 0
    assert run(["verify", "--suite", "nope"])[0] == 1


def test_verify_failure_exit_code(monkeypatch):
    from plgroup import cli, harness

    real = harness.run_suite
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: real(*a, conj=harness.reversed_conjugate, **k))
    assert run(["verify", "--suite", "beta", "--cases", "100"])[0] == 2


@given(p_elements)
def test_emit_parse_roundtrip(f):
    code, out, _ = run(["invert", "--mode", "P"], f.to_json())
    code, back, _ = run(["invert", "--mode", "P"], out)
    assert PLHomeo.from_json(back) == f and back.strip() == f.to_json()


def test_console_entry_point(x0_file):
    proc = subprocess.run([sys.executable, "-m", "plgroup.cli", "invariant", "alpha", x0_file], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(-1, 1)\n"
