"""One-point codes C_l(P) and improved codes on the GK curve.

Parity-check rows are evaluation vectors of the canonical basis functions
at every rational point other than ``P``, in the curve's canonical order.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO, Union

import numpy as np

from . import reference
from .curve import O1, O2, CurvePoint, get_curve
from .field import FieldSpec, get_field
from .funcfield import BasePoint, base_point
from .semigroup import (NumericalSemigroup, gk_semigroup, improved_indices, nu,
                        order_bound, r_d, rho, tail_start)


class IndependenceError(RuntimeError):
    """Evaluation vectors of functions with distinct pole orders were dependent."""


@dataclass
class EvalMatrix:
    rows: np.ndarray               # shape (r, n), field encodings
    row_meta: list[int]            # pole order of each row
    point_order: list[CurvePoint]
    field: FieldSpec
    qbar: int
    orbit: str
    base: CurvePoint
    kind: str                      # "Cl:<ell>" or "Improved:<d>"

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def num_rows(self) -> int:
        return self.rows.shape[0]

    def rank(self) -> int:
        return rank(self.rows, self.field)


@dataclass
class CodeSpec:
    n: int
    k: int
    d: int                         # designed distance, never a claimed true minimum
    kind: str                      # "Cl", "Improved" or "Propagated"
    qbar: int = 2
    orbit: Optional[str] = None
    info: dict = field(default_factory=dict)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)


# ---------------------------------------------------------------------------
# linear algebra over GF(q^2)


def row_echelon(rows: np.ndarray, F: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Forward elimination; pivot = first nonzero column, first available row."""
    M = np.array(rows, dtype=np.int32, copy=True)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    r, n = M.shape
    pivots: list[int] = []
    top = 0
    for col in range(n):
        if top == r:
            break
        nz = np.flatnonzero(M[top:, col])
        if nz.size == 0:
            continue
        piv = top + int(nz[0])
        if piv != top:
            M[[top, piv]] = M[[piv, top]]
        M[top] = F.mul_table[F.inv_table[M[top, col]], M[top]]
        below = top + 1 + np.flatnonzero(M[top + 1:, col])
        if below.size:
            f = M[below, col]
            M[below] = F.add_table[M[below], F.neg_table[F.mul_table[f[:, None], M[top][None, :]]]]
        pivots.append(col)
        top += 1
    return M[:top], pivots


def rank(rows, F: FieldSpec) -> int:
    rows = np.asarray(rows)
    if rows.size == 0:
        return 0
    return len(row_echelon(rows, F)[1])


# ---------------------------------------------------------------------------
# parity-check matrices


def _evaluate_basis(base: BasePoint, ell: int) -> tuple[np.ndarray, list[int]]:
    basis = base.lseries_basis(ell)
    pts = base.evaluation_points
    gv = base.generator_values(pts)
    rows = np.stack([f.evaluate_values(gv) for f in basis])
    return rows, [f.pole_order for f in basis]


def parity_matrix_Cl(qbar: int, orbit: str, ell: int, point: Optional[CurvePoint] = None,
                     fld: Optional[FieldSpec] = None, check: bool = True) -> EvalMatrix:
    """Parity-check matrix of C_l(P): rows h_1, ..., h_l."""
    curve = get_curve(qbar, fld)
    base = base_point(qbar, orbit, point, curve)
    S = gk_semigroup(qbar, orbit)
    n = len(curve.points) - 1
    if rho(S, ell) >= n:
        raise ValueError(f"rho_{ell} = {rho(S, ell)} is not below the length {n}")
    rows, meta = _evaluate_basis(base, ell)
    mat = EvalMatrix(rows, meta, base.evaluation_points, curve.field, qbar, orbit,
                     base.point, f"Cl:{ell}")
    if check and mat.rank() != ell:
        raise IndependenceError("independence failure")
    return mat


def parity_matrix_improved(qbar: int, orbit: str, d: int, point: Optional[CurvePoint] = None,
                           fld: Optional[FieldSpec] = None) -> EvalMatrix:
    """Parity-check matrix of the improved code: rows h_{i+1} with nu_i < d."""
    curve = get_curve(qbar, fld)
    base = base_point(qbar, orbit, point, curve)
    S = gk_semigroup(qbar, orbit)
    idx = improved_indices(S, d)
    rows, meta = _evaluate_basis(base, max(idx) + 1)
    return EvalMatrix(rows[idx], [meta[i] for i in idx], base.evaluation_points,
                      curve.field, qbar, orbit, base.point, f"Improved:{d}")


# ---------------------------------------------------------------------------
# exhaustive minimum distance for tiny dimensions


def min_distance_bruteforce(generator_rows, F: FieldSpec, k_limit: int = 3) -> int:
    """Minimum Hamming weight of the code spanned by ``generator_rows``.

    Codewords are scanned up to scalar multiples, which covers every
    nonzero codeword's weight.
    """
    basis, _ = row_echelon(np.asarray(generator_rows), F)
    k = basis.shape[0]
    if k == 0:
        raise ValueError("zero code")
    if k > k_limit:
        raise ValueError(f"too large: dimension {k} exceeds limit {k_limit}")
    q = F.order
    best = basis.shape[1]
    for lead in range(k):
        rest = k - 1 - lead
        count = q**rest
        msgs = np.zeros((count, k), dtype=np.int32)
        msgs[:, lead] = 1
        for j in range(rest):
            msgs[:, lead + 1 + j] = (np.arange(count) // q ** (rest - 1 - j)) % q
        words = np.zeros((count, basis.shape[1]), dtype=np.int32)
        for i in range(lead, k):
            words = F.add_table[words, F.mul_table[msgs[:, i, None], basis[i][None, :]]]
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


# ---------------------------------------------------------------------------
# parameter tables


def code_table(qbar: int, orbit: str, ell_max: Optional[int] = None) -> list[dict]:
    """Rows (n, k, rho, nu, d_ord) for C_1 ... C_ell_max."""
    S = gk_semigroup(qbar, orbit)
    n = reference.code_length(qbar)
    if ell_max is None:
        ell_max = tail_start(S)
    return [{"ell": ell, "n": n, "k": n - ell, "rho": rho(S, ell), "nu": nu(S, ell),
             "d_ord": order_bound(S, ell)} for ell in range(1, ell_max + 1)]


def improved_table(qbar: int, orbit: str, d_values: Optional[Iterable[int]] = None) -> list[dict]:
    """Rows (n, d, r_d, k_lb) with k_lb = n - r_d."""
    S = gk_semigroup(qbar, orbit)
    n = reference.code_length(qbar)
    if d_values is None:
        d_values = range(2, 2 * S.genus + 1)
    return [{"n": n, "d": d, "r_d": r_d(S, d), "k_lb": n - r_d(S, d)} for d in d_values]


def cl_spec(qbar: int, orbit: str, ell: int) -> CodeSpec:
    S = gk_semigroup(qbar, orbit)
    n = reference.code_length(qbar)
    return CodeSpec(n, n - ell, order_bound(S, ell), "Cl", qbar, orbit,
                    {"ell": ell, "rho": rho(S, ell)})


def improved_spec(qbar: int, orbit: str, d: int, exact_rank: Optional[int] = None) -> CodeSpec:
    S = gk_semigroup(qbar, orbit)
    n = reference.code_length(qbar)
    info = {"d": d, "r_d": r_d(S, d)}
    if exact_rank is not None:
        info["rank"] = exact_rank
    k = n - (exact_rank if exact_rank is not None else info["r_d"])
    return CodeSpec(n, k, d, "Improved", qbar, orbit, info)


# ---------------------------------------------------------------------------
# propagation rules


def propagate(n: int, k: int, d: int) -> list[CodeSpec]:
    """Every code obtainable in one application of the four classical rules."""
    if not (n > k >= 1 and d >= 1):
        raise ValueError("need n > k >= 1 and d >= 1")
    src = (n, k, d)
    out = []
    for s in range(d):
        out.append(CodeSpec(n, k, d - s, "Propagated", info={"from": src, "rule": 1, "s": s}))
    for s in range(k):
        out.append(CodeSpec(n, k - s, d, "Propagated", info={"from": src, "rule": 2, "s": s}))
    for s in range(k):
        out.append(CodeSpec(n - s, k - s, d, "Propagated", info={"from": src, "rule": 3, "s": s}))
    for s in range(min(n - k - 1, d)):
        out.append(CodeSpec(n - s, k, d - s, "Propagated", info={"from": src, "rule": 4, "s": s}))
    return out


def best_distance_closure(seeds: Sequence[tuple[int, int, int]]) -> dict[tuple[int, int], int]:
    """Largest d reachable at each (n, k) from ``seeds`` under repeated use of
    the propagation rules.

    Each rule with step s is a composition of s unit steps, so a single sweep
    over decreasing n and k settles the closure.
    """
    n_max = max(s[0] for s in seeds)
    best = np.zeros((n_max + 2, n_max + 2), dtype=np.int64)
    for n, k, d in seeds:
        best[n, k] = max(best[n, k], d)
    for n in range(n_max, 0, -1):
        for k in range(n - 1, 0, -1):
            cands = [best[n, k]]
            cands.append(best[n, k + 1])          # drop one dimension
            cands.append(best[n + 1, k + 1])      # shorten
            d4 = best[n + 1, k]                   # puncture
            if d4 > 1 and (n + 1) - k - 1 > 1:
                cands.append(d4 - 1)
            best[n, k] = max(cands)
    return {(n, k): int(best[n, k]) for n in range(1, n_max + 1)
            for k in range(1, n) if best[n, k] > 0}


def improvement_seeds(qbar: int = 2) -> list[CodeSpec]:
    """Best improved codes (over both orbits) at the seed designed distances."""
    if qbar != 2:
        raise ValueError("improvement table is only available for qbar = 2")
    n = reference.code_length(qbar)
    seeds = []
    for d in reference.SEED_DISTANCES:
        ks = {o: n - r_d(gk_semigroup(qbar, o), d) for o in (O1, O2)}
        k = max(ks.values())
        best = [o for o in (O1, O2) if ks[o] == k]
        seeds.append(CodeSpec(n, k, d, "Improved", qbar, "/".join(best), {"d": d}))
    return seeds


def improvements_table(qbar: int = 2) -> list[CodeSpec]:
    """Propagation closure of the seed codes restricted to the length windows in
    which they beat the best previously known codes."""
    seeds = improvement_seeds(qbar)
    closure = best_distance_closure([s.params for s in seeds])
    by_codim = {s.n - s.k: s for s in seeds}
    out = []
    for codim, (lo, hi) in sorted(reference.IMPROVEMENT_WINDOWS.items()):
        seed = by_codim[codim]
        for n in range(hi, lo - 1, -1):
            k = n - codim
            d = closure[(n, k)]
            if (n, k, d) == seed.params:
                out.append(seed)
            else:
                out.append(CodeSpec(n, k, d, "Propagated", qbar,
                                    info={"from": seed.params, "rule": 3, "s": hi - n}))
    return out


# ---------------------------------------------------------------------------
# GKMAT/1 matrix files


def _point_str(pt: CurvePoint) -> str:
    return "inf" if pt.is_infinite else f"{pt.x},{pt.y},{pt.z}"


def write_gkmat(mat: EvalMatrix, out: Union[TextIO, str, Path, None] = None) -> str:
    F = mat.field
    buf = io.StringIO()
    buf.write("GKMAT/1\n")
    buf.write(f"p={F.p} m={F.m} irr={','.join(map(str, F.irr))} qbar={mat.qbar} "
              f"orbit={mat.orbit} kind={mat.kind} n={mat.n} rows={mat.num_rows} "
              f"point={_point_str(mat.base)}\n")
    for row in mat.rows:
        buf.write(" ".join(map(str, row.tolist())))
        buf.write("\n")
    text = buf.getvalue()
    if isinstance(out, (str, Path)):
        Path(out).write_text(text)
    elif out is not None:
        out.write(text)
    return text


def read_gkmat(source: Union[str, Path, TextIO]) -> tuple[dict, np.ndarray]:
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        text = Path(source).read_text()
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    lines = text.splitlines()
    if not lines or lines[0] != "GKMAT/1":
        raise ValueError("not a GKMAT/1 file")
    header = dict(tok.split("=", 1) for tok in lines[1].split())
    for key in ("p", "m", "qbar", "n", "rows"):
        header[key] = int(header[key])
    header["irr"] = [int(c) for c in header["irr"].split(",")]
    rows = np.array([[int(v) for v in ln.split()] for ln in lines[2:] if ln.strip()],
                    dtype=np.int32).reshape(header["rows"], header["n"])
    return header, rows


def field_from_header(header: dict) -> FieldSpec:
    return get_field(header["p"], header["m"], header["irr"])
