from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ccsec import cli, golden
from ccsec.cli import main, stable, thread_count


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_degrees_md(capsys):
    code, out, _ = run(capsys, "table", "degrees", "--rmax", "5")
    assert code == 0
    last = [line for line in out.splitlines() if line.startswith("|")][-1]
    assert last.rstrip(" |").endswith("42")
    assert "*" not in out


def test_table_marks_conjectural_rows(capsys):
    code, out, _ = run(capsys, "table", "csm", "--rmax", "7")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("|")]
    assert "*" in rows[-1] and "*" not in rows[-3]
    assert "conjectural" in out
    code, out, _ = run(capsys, "table", "degrees", "--rmax", "7", "--format", "json")
    data = json.loads(out)
    assert data["rows"][7]["conjectural"] is True and data["rows"][5]["conjectural"] is False
    assert data["rows"][7]["values"][-1] == "429"


def test_table_dyck_and_qpoly(capsys):
    code, out, _ = run(capsys, "table", "dyck", "--nmax", "6", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "6,1,57,69,5"
    code, out, _ = run(capsys, "table", "qpoly", "--nmax", "0", "--format", "csv")
    assert out.splitlines()[1].split(",")[1] == "1"
    assert len(out.splitlines()) == 2


def test_secant_r2(capsys):
    code, out, _ = run(capsys, "secant", "--r", "2")
    assert code == 0
    data = json.loads(out)
    assert data["g_ed_degree"] == 13 and data["grad_degree"] == 2
    assert data["euler_char"] == 4 and data["polar_degrees"] == [0, 4, 6, 3]


def test_secant_conjectural_flag(capsys):
    code, out, _ = run(capsys, "secant", "--r", "6")
    assert code == 0 and json.loads(out)["conjectural"] is True


def test_secant_n_k(capsys):
    code, out, _ = run(capsys, "secant", "--n", "10", "--k", "3")
    data = json.loads(out)
    assert data["fixed_points"] == [0, 1, 2, 8, 9, 10] and data["euler_char"] == 6


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "4", "--k", "2")
    assert code == 0
    data = json.loads(out)
    assert data["numerator"] == [1, 1, 1] and data["denominator_power"] == 4 and data["degree"] == 3
    code, out, _ = run(capsys, "hilbert", "--n", "6", "--k", "2")
    assert json.loads(out)["section_curve_genus"] == 6


def test_algorithm(capsys):
    code, out, _ = run(capsys, "algorithm", "--rmax", "3", "--emit-polys")
    data = json.loads(out)
    assert data["d"][3] == ["1", "3", "9", "17", "21", "15", "5"]
    assert "pold" in data
    code, out, _ = run(capsys, "algorithm", "--rmax", "3", "--format", "md", "--emit-polys")
    assert "pold_i(t)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "bogus"],
        ["table", "dyck", "--rmax", "3"],
        ["table", "csm", "--rmax", "-1"],
        ["secant"],
        ["secant", "--r", "2", "--n", "4"],
        ["secant", "--r", "0"],
        ["secant", "--n", "4", "--k", "3"],
        ["hilbert", "--n", "3", "--k", "2"],
        ["algorithm", "--rmax", "-2"],
        ["verify", "--format", "xml"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_thread_env():
    assert thread_count({"CCSEC_THREADS": "3"}) == 3
    assert thread_count({"CCSEC_THREADS": "0"}) >= 1
    assert thread_count({}) >= 1
    for bad in ("x", "-1"):
        with pytest.raises(cli.UsageError):
            thread_count({"CCSEC_THREADS": bad})


def test_bad_thread_env_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("CCSEC_THREADS", "many")
    code, _, err = run(capsys, "verify", "--rmax", "2", "--nmax", "2")
    assert code == 2 and "CCSEC_THREADS" in err


def test_stable_json_values():
    assert stable(2**63 - 1) == 2**63 - 1
    assert stable(2**63) == str(2**63)
    assert stable(-(2**64)) == str(-(2**64))
    assert stable({"a": (1, 2)}) == {"a": [1, 2]}


def test_verify_passes(capsys, monkeypatch):
    monkeypatch.setenv("CCSEC_THREADS", "1")
    code, out, _ = run(capsys, "verify", "--rmax", "12", "--nmax", "20", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] is True
    assert {s["name"] for s in data["suites"]} >= {"algebra", "charclass", "hilbert", "secant", "conjecture", "golden"}


def test_verify_fails_on_perturbed_golden(capsys, monkeypatch):
    real = golden.projective_degrees()
    tampered = dict(real)
    tampered[4] = tampered[4][:-1] + (tampered[4][-1] + 1,)
    monkeypatch.setattr(golden, "projective_degrees", lambda: tampered)
    monkeypatch.setenv("CCSEC_THREADS", "1")
    code, out, _ = run(capsys, "verify", "--rmax", "6", "--nmax", "8")
    assert code == 1
    assert "FAIL" in out


def test_verify_fails_on_perturbed_dyck_row(capsys, monkeypatch):
    rows = dict(golden.dyck_rows())
    rows[6] = (1, 57, 70, 5)
    monkeypatch.setattr(golden, "dyck_rows", lambda: rows)
    code, _, _ = run(capsys, "verify", "--rmax", "6", "--nmax", "8")
    assert code == 1


def test_json_is_byte_stable():
    cmd = [sys.executable, "-m", "ccsec", "secant", "--r", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
    assert json.loads(first)["g_ed_degree"] == 121
