from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkcodes import reference
from gkcodes.codes import (IndependenceError, best_distance_closure, cl_spec, code_table,
                           field_from_header, improved_spec, improved_table,
                           improvement_seeds, improvements_table, min_distance_bruteforce,
                           parity_matrix_Cl, parity_matrix_improved, propagate, rank,
                           read_gkmat, row_echelon, write_gkmat)
from gkcodes.curve import O1, O2
from gkcodes.field import get_field
from gkcodes.semigroup import gk_semigroup, improved_indices

F64 = get_field(2, 6)


def _known_rank_matrix(F, rng, rows, cols, r):
    """L @ U with L invertible lower unitriangular and U of rank r in echelon form."""
    U = np.zeros((rows, cols), dtype=np.int64)
    pivots = sorted(rng.choice(cols, size=r, replace=False))
    for i, c in enumerate(pivots):
        U[i, c] = rng.integers(1, F.order)
        U[i, c + 1:] = rng.integers(0, F.order, cols - c - 1)
    L = np.tril(rng.integers(0, F.order, (rows, rows)), -1)
    np.fill_diagonal(L, 1)
    M = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for k in range(rows):
            M[i] = F.vadd(M[i], F.vmul(np.full(cols, L[i, k]), U[k]))
    return M


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(1, 12), st.integers(0, 2**32 - 1), st.sampled_from([2, 3]))
def test_rank_against_construction(rows, cols, seed, p):
    F = get_field(p, 6)
    rng = np.random.default_rng(seed)
    r = int(rng.integers(0, min(rows, cols) + 1))
    M = _known_rank_matrix(F, rng, rows, cols, r)
    assert rank(M, F) == r
    E, piv = row_echelon(M, F)
    assert len(piv) == r and all(E[i, c] == 1 for i, c in enumerate(piv))


def test_parity_matrices_have_full_rank():
    for orbit in (O1, O2):
        mat = parity_matrix_Cl(2, orbit, 25)
        assert mat.rows.shape == (25, 224) and mat.rank() == 25
        assert mat.row_meta == sorted(mat.row_meta)


def test_parity_rows_are_nested():
    small = parity_matrix_Cl(2, O2, 5).rows
    big = parity_matrix_Cl(2, O2, 12).rows
    assert np.array_equal(big[:5], small)


def test_improved_matrix_selects_rows():
    S = gk_semigroup(2, O1)
    for d in (5, 13, 20):
        idx = improved_indices(S, d)
        mat = parity_matrix_improved(2, O1, d)
        full = parity_matrix_Cl(2, O1, max(idx) + 1).rows
        assert np.array_equal(mat.rows, full[idx])
        assert mat.rank() == len(idx)


def test_length_guard():
    with pytest.raises(ValueError):
        parity_matrix_Cl(2, O1, 224)


def test_bruteforce_against_naive_enumeration():
    rng = np.random.default_rng(3)
    G = rng.integers(0, 64, (2, 12))
    best = 12
    for a, b in itertools.product(range(64), repeat=2):
        if a or b:
            w = F64.vadd(F64.vmul(np.full(12, a), G[0]), F64.vmul(np.full(12, b), G[1]))
            best = min(best, int(np.count_nonzero(w)))
    assert min_distance_bruteforce(G, F64) == best
    with pytest.raises(ValueError, match="too large"):
        min_distance_bruteforce(rng.integers(1, 64, (4, 10)), F64)


def test_tables_match_reference():
    for orbit, table in ((O1, reference.TABLE_I), (O2, reference.TABLE_II)):
        rows = code_table(2, orbit)
        assert len(rows) == 29
        assert [(r["rho"], r["nu"], r["d_ord"]) for r in rows] == [t[1:] for t in table]
    diffs = [(r["rho"], t[0]) for r, t in zip(code_table(2, O1), reference.TABLE_I)
             if r["k"] != t[0]]
    assert diffs == [(8, 222)]
    for orbit, table in ((O1, reference.TABLE_III), (O2, reference.TABLE_IV)):
        rows = improved_table(2, orbit, [t[0] for t in table])
        assert [(r["d"], r["r_d"], r["k_lb"]) for r in rows] == list(table)


def test_specs():
    s = cl_spec(2, O2, 20)
    assert s.params == (224, 204, 13)
    t = improved_spec(2, O2, 13)
    assert t.params == (224, 204, 13)
    assert improved_spec(2, O2, 13, exact_rank=19).k == 205


def test_propagation_rules():
    out = {(c.params, c.info["rule"]) for c in propagate(10, 5, 4)}
    assert ((10, 5, 1), 1) in out
    assert ((10, 1, 4), 2) in out
    assert ((6, 1, 4), 3) in out
    assert ((8, 5, 2), 4) in out
    # puncturing stops before the code becomes trivial
    assert max(c.info["s"] for c in propagate(6, 4, 3) if c.info["rule"] == 4) == 0
    with pytest.raises(ValueError):
        propagate(5, 5, 1)


def test_closure_small():
    best = best_distance_closure([(8, 4, 4)])
    assert best[(8, 4)] == 4
    assert best[(7, 3)] == 4   # shortening
    assert best[(7, 4)] == 3   # puncturing
    assert best[(8, 2)] == 4   # subcode


def test_improvements():
    seeds = improvement_seeds()
    assert [s.params for s in seeds] == [(224, 204, 13), (224, 202, 14), (224, 201, 15),
                                         (224, 196, 20)]
    table = improvements_table()
    assert len(table) == 70
    assert sorted(c.params for c in table) == sorted(reference.IMPROVEMENTS)
    with pytest.raises(ValueError):
        improvement_seeds(3)


def test_gkmat_roundtrip(tmp_path):
    mat = parity_matrix_Cl(2, O2, 7)
    text = write_gkmat(mat)
    assert text == write_gkmat(parity_matrix_Cl(2, O2, 7))
    path = tmp_path / "m.gkmat"
    write_gkmat(mat, path)
    header, rows = read_gkmat(path)
    assert np.array_equal(rows, mat.rows)
    assert header["kind"] == "Cl:7" and header["n"] == 224 and header["rows"] == 7
    assert field_from_header(header) == mat.field
    with pytest.raises(ValueError):
        read_gkmat("nonsense\n1 2\n")


def test_independence_error_is_runtime_error():
    assert issubclass(IndependenceError, RuntimeError)
