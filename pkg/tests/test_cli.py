from __future__ import annotations

import json
import subprocess
import sys

import jsonschema
import pytest

from gkcodes.cli import SCHEMAS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,schema", [
    (["points", "--qbar", "2"], "points"),
    (["nu-table", "--qbar", "3", "--orbit", "O2"], "nu-table"),
    (["code-table", "--qbar", "2", "--orbit", "O2"], "code-table"),
    (["code-table", "--qbar", "3", "--orbit", "O1"], "code-table"),
    (["improved-table", "--qbar", "2", "--orbit", "O1"], "improved-table"),
    (["improvements"], "improvements"),
])
def test_json_matches_schema(capsys, argv, schema):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMAS[schema])


def test_points_csv(capsys):
    code, out, _ = run(capsys, "points", "--qbar", "2", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "index,x,y,z,orbit" and len(lines) == 226


def test_code_table_rows(capsys):
    _, out, _ = run(capsys, "code-table", "--qbar", "2", "--orbit", "O2")
    rows = json.loads(out)
    assert len(rows) == 29
    assert (rows[19]["k"], rows[19]["rho"], rows[19]["nu"], rows[19]["d_ord"]) == (204, 29, 13, 13)


def test_improvements_count(capsys):
    _, out, _ = run(capsys, "improvements", "--format", "csv")
    assert len(out.splitlines()) == 71


def test_output_is_deterministic(capsys):
    for argv in (["code-table", "--qbar", "3", "--orbit", "O2"],
                 ["matrix", "--qbar", "2", "--orbit", "O2", "--ell", "6"],
                 ["improved-matrix", "--qbar", "2", "--d", "6"]):
        first = run(capsys, *argv)[1]
        assert first and first == run(capsys, *argv)[1]


def test_matrix_file(capsys, tmp_path):
    path = tmp_path / "h.gkmat"
    code, out, _ = run(capsys, "matrix", "--qbar", "2", "--ell", "4", "--out", str(path))
    lines = path.read_text().splitlines()
    assert code == 0 and out == ""
    assert lines[0] == "GKMAT/1" and "kind=Cl:4" in lines[1] and len(lines) == 6


def test_big_matrices_are_gated(capsys):
    code, out, _ = run(capsys, "matrix", "--qbar", "3", "--ell", "5")
    assert code == 0 and json.loads(out)["n"] == 6075
    code, out, _ = run(capsys, "improved-matrix", "--qbar", "3", "--d", "3", "--orbit", "O2")
    from gkcodes.semigroup import gk_semigroup, r_d
    assert code == 0 and json.loads(out)["r_d"] == r_d(gk_semigroup(3, "O2"), 3)


def test_explicit_point(capsys, curve2):
    F = curve2.field
    P = next(p for p in curve2.points if p.orbit == "O2" and p.x and p.y)
    spec = ",".join(str(int(F.log_table[v])) for v in (P.x, P.y, P.z))
    code, out, _ = run(capsys, "matrix", "--qbar", "2", "--ell", "3", "--point", spec)
    assert code == 0 and f"point={P.x},{P.y},{P.z}" in out


def test_verify_function(capsys):
    code, out, _ = run(capsys, "verify-function", "--qbar", "2")
    rows = json.loads(out)
    assert code == 0 and [r["N"] for r in rows] == [9, 8, 7, 13]
    code, out, _ = run(capsys, "verify-function", "--qbar", "3", "--name", "gamma")
    assert code == 0 and json.loads(out)[0]["M"] == 19


def test_imult(capsys):
    code, out, _ = run(capsys, "imult", "--f", "Y^2 + Z^3", "--g", "Y")
    assert code == 0 and json.loads(out) == {"I": 3}
    code, out, _ = run(capsys, "imult", "--f", "Y", "--g", "Y*Z")
    assert json.loads(out) == {"I": "inf"}


def test_search_nongap(capsys):
    code, out, _ = run(capsys, "search-nongap", "--qbar", "2", "--monomials", "1,Y,Z")
    assert code == 0 and [r["N"] for r in json.loads(out)] == [7, 8, 9]


def test_semigroup(capsys):
    _, out, _ = run(capsys, "semigroup", "--qbar", "3", "--orbit", "O2")
    info = json.loads(out)
    assert info["genus"] == 99 and len(info["gaps"]) == 99


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["points", "--unknown"],
    ["matrix", "--qbar", "2"],
    ["matrix", "--qbar", "2", "--ell", "3", "--point", "1,2"],
    ["matrix", "--qbar", "2", "--ell", "3", "--point", "1,2,3"],
    ["imult", "--f", "Y^^2", "--g", "Z"],
    ["search-nongap", "--qbar", "3"],
    ["improvements", "--qbar", "3"],
    ["code-table", "--format", "gkmat"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().err


def test_invariant_violation_exits_1(capsys, monkeypatch):
    import gkcodes.cli as cli
    from gkcodes.codes import IndependenceError

    def boom(*a, **k):
        raise IndependenceError("independence failure")
    monkeypatch.setattr(cli, "parity_matrix_Cl", boom)
    code, _, err = run(capsys, "matrix", "--qbar", "2", "--ell", "3")
    assert code == 1 and "independence failure" in err


def test_field_override(capsys, monkeypatch):
    monkeypatch.setenv("GKAGC_FIELD_POLY", "1,1,0,0,0,0,1")
    code, out, _ = run(capsys, "matrix", "--qbar", "2", "--ell", "2")
    assert code == 0 and "irr=1,1,0,0,0,0,1" in out
    monkeypatch.setenv("GKAGC_FIELD_POLY", "1,0,0,0,0,0,1")
    assert run(capsys, "points")[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gkcodes", "code-table", "--qbar", "2"],
                          capture_output=True, text=True, check=True)
    assert len(json.loads(proc.stdout)) == 29
