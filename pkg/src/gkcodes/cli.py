"""Command-line front end: ``gkagc <subcommand> [options]``.

Exit status: 0 on success, 2 on usage or input errors, 1 when a mathematical
invariant fails (dependent parity rows, a failed certificate or self-test).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from . import selftest
from .codes import (IndependenceError, code_table, improved_spec, improved_table,
                    improvements_table, parity_matrix_Cl, parity_matrix_improved,
                    write_gkmat)
from .curve import O1, O2, INFINITY, CurvePoint, get_curve
from .field import FieldError, FieldSpec, get_field
from .funcfield import base_point
from .intersect import (INFINITE, IntersectError, certify_function, imult_origin,
                        parse_poly, search_nongaps)
from .semigroup import gk_semigroup, nu, rho, tail_start

FIELD_POLY_ENV = "GKAGC_FIELD_POLY"

# JSON schemas of the table subcommands (each emits an array of row objects)
_INT = {"type": "integer"}
SCHEMAS = {
    "points": {"type": "array", "items": {
        "type": "object", "required": ["index", "x", "y", "z", "orbit"],
        "properties": {"index": _INT, "x": {"type": ["integer", "null"]},
                       "y": {"type": ["integer", "null"]}, "z": {"type": ["integer", "null"]},
                       "orbit": {"enum": [O1, O2]}}}},
    "nu-table": {"type": "array", "items": {
        "type": "object", "required": ["ell", "rho", "nu"],
        "properties": {"ell": _INT, "rho": _INT, "nu": _INT}}},
    "code-table": {"type": "array", "items": {
        "type": "object", "required": ["ell", "n", "k", "rho", "nu", "d_ord"],
        "properties": {k: _INT for k in ("ell", "n", "k", "rho", "nu", "d_ord")}}},
    "improved-table": {"type": "array", "items": {
        "type": "object", "required": ["n", "d", "r_d", "k_lb"],
        "properties": {k: _INT for k in ("n", "d", "r_d", "k_lb")}}},
    "improvements": {"type": "array", "items": {
        "type": "object", "required": ["n", "k", "d", "kind"],
        "properties": {"n": _INT, "k": _INT, "d": _INT, "kind": {"type": "string"}}}},
}


class UsageError(Exception):
    pass


class InvariantError(Exception):
    pass


# --- configuration ----------------------------------------------------------------


def field_for(qbar: int) -> FieldSpec:
    """Default field for ``qbar``, with the GF(64) polynomial overridable from
    the environment as comma-separated little-endian coefficients."""
    if qbar == 2 and os.environ.get(FIELD_POLY_ENV):
        try:
            coeffs = [int(c) for c in os.environ[FIELD_POLY_ENV].split(",")]
        except ValueError:
            raise UsageError(f"{FIELD_POLY_ENV} must be comma-separated integers") from None
        return get_field(2, 6, coeffs)
    return get_field(2 if qbar == 2 else 3, 6)


def parse_point(text: Optional[str], F: FieldSpec, curve) -> Optional[CurvePoint]:
    """``aExp,bExp,cExp`` (powers of the generator; ``zero`` for 0) or ``inf``."""
    if text is None:
        return None
    if text == "inf":
        return INFINITY
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError("--point expects aExp,bExp,cExp")
    try:
        enc = [0 if s == "zero" else F.gen_pow(int(s)) for s in parts]
    except ValueError:
        raise UsageError(f"bad --point {text!r}") from None
    try:
        return curve.point(*enc)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _orbit_of(args, point: Optional[CurvePoint]) -> str:
    if args.orbit:
        return args.orbit
    return point.orbit if point is not None else O1


# --- output -----------------------------------------------------------------------


def emit(args, rows: list[dict], text: Optional[str] = None) -> None:
    if text is None:
        if args.format == "csv":
            buf = io.StringIO()
            if rows:
                w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
                w.writeheader()
                w.writerows(rows)
            text = buf.getvalue()
        elif args.format == "gkmat":
            raise UsageError("gkmat output is only available for matrix subcommands")
        else:
            text = json.dumps(rows, indent=1) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands ------------------------------------------------------------------


def cmd_points(args) -> int:
    curve = get_curve(args.qbar, field_for(args.qbar))
    emit(args, [{"index": i, "x": p.x, "y": p.y, "z": p.z, "orbit": p.orbit}
                for i, p in enumerate(curve.points)])
    return 0


def cmd_semigroup(args) -> int:
    S = gk_semigroup(args.qbar, args.orbit or O1)
    info = {"generators": list(S.generators), "genus": S.genus, "conductor": S.conductor,
            "tail_start": tail_start(S), "gaps": S.gaps}
    if args.format == "csv":
        emit(args, [{"gap": g} for g in S.gaps])
    else:
        emit(args, [], json.dumps(info, indent=1) + "\n")
    return 0


def cmd_nu_table(args) -> int:
    S = gk_semigroup(args.qbar, args.orbit or O1)
    top = args.ell if args.ell is not None else tail_start(S)
    emit(args, [{"ell": ell, "rho": rho(S, ell), "nu": nu(S, ell)} for ell in range(1, top + 1)])
    return 0


def cmd_code_table(args) -> int:
    emit(args, code_table(args.qbar, args.orbit or O1, args.ell))
    return 0


def cmd_improved_table(args) -> int:
    d_values = [args.d] if args.d is not None else None
    emit(args, improved_table(args.qbar, args.orbit or O1, d_values))
    return 0


def cmd_improvements(args) -> int:
    if args.qbar != 2:
        raise UsageError("the improvements table exists for --qbar 2 only")
    emit(args, [{"n": c.n, "k": c.k, "d": c.d, "kind": c.kind} for c in improvements_table(2)])
    return 0


def _emit_matrix(args, mat, params: dict) -> int:
    if args.qbar == 3 and not args.big:
        # 6075-column matrices are opt-in
        emit(args, [], json.dumps(params, indent=1) + "\n")
        return 0
    if args.format == "gkmat" or args.format is None:
        emit(args, [], write_gkmat(mat))
    else:
        emit(args, [{f"c{j}": int(v) for j, v in enumerate(row)} for row in mat.rows])
    return 0


def _matrix_context(args):
    F = field_for(args.qbar)
    curve = get_curve(args.qbar, F)
    point = parse_point(args.point, F, curve)
    return F, curve, point, _orbit_of(args, point)


def cmd_matrix(args) -> int:
    if args.ell is None:
        raise UsageError("matrix needs --ell")
    F, curve, point, orbit = _matrix_context(args)
    big = args.qbar == 2 or args.big
    mat = parity_matrix_Cl(args.qbar, orbit, args.ell, point, F, check=big) if big else None
    S = gk_semigroup(args.qbar, orbit)
    params = {"n": len(curve.points) - 1, "k": len(curve.points) - 1 - args.ell,
              "ell": args.ell, "rho": rho(S, args.ell), "orbit": orbit}
    return _emit_matrix(args, mat, params)


def cmd_improved_matrix(args) -> int:
    if args.d is None:
        raise UsageError("improved-matrix needs --d")
    F, curve, point, orbit = _matrix_context(args)
    spec = improved_spec(args.qbar, orbit, args.d)
    params = {"n": spec.n, "k_lb": spec.k, "d": args.d, "r_d": spec.info["r_d"], "orbit": orbit}
    mat = None
    if args.qbar == 2 or args.big:
        mat = parity_matrix_improved(args.qbar, orbit, args.d, point, F)
    return _emit_matrix(args, mat, params)


def cmd_verify_function(args) -> int:
    F = field_for(args.qbar)
    curve = get_curve(args.qbar, F)
    point = parse_point(args.point, F, curve)
    base = base_point(args.qbar, O2, point, curve)
    rows, ok = [], True
    for gen in base.generators:
        if args.name and gen.name != args.name:
            continue
        rep = certify_function(curve, base.point, gen.expansion)
        good = rep.N == gen.pole_order
        ok &= good
        rows.append({"name": gen.name, "pole_order": gen.pole_order, "M": rep.M, "N": rep.N,
                     "m": rep.m, "vO_E": rep.vO_E, "ok": good})
    if not rows:
        raise UsageError(f"no generator named {args.name!r} at this point")
    emit(args, rows)
    if not ok:
        raise InvariantError("certificate mismatch")
    return 0


def cmd_imult(args) -> int:
    if not (args.f and args.g):
        raise UsageError("imult needs --f and --g")
    F = field_for(args.qbar)
    try:
        f, g = parse_poly(args.f, F), parse_poly(args.g, F)
    except IntersectError as exc:
        raise UsageError(str(exc)) from None
    val = imult_origin(f, g)
    emit(args, [], json.dumps({"I": "inf" if val is INFINITE else val}) + "\n")
    return 0


def cmd_search_nongap(args) -> int:
    if args.qbar != 2:
        raise UsageError("search-nongap is only tractable for --qbar 2")
    F = field_for(2)
    curve = get_curve(2, F)
    point = parse_point(args.point, F, curve)
    P = base_point(2, O2, point, curve).point
    monos = []
    for tok in args.monomials.split(","):
        poly = parse_poly(tok, F)
        if len(poly.terms) != 1:
            raise UsageError(f"not a monomial: {tok!r}")
        monos.append(next(iter(poly.terms)))
    found = search_nongaps(curve, P, monos)
    emit(args, [{"N": N, "witness": list(w)} for N, w in sorted(found.items())])
    return 0


def cmd_selftest(args) -> int:
    qbars = [args.qbar] if args.qbar_given else [2, 3]
    fields = {q: field_for(q) for q in qbars}
    results = selftest.run(qbars, sys.stdout, fields)
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "points": cmd_points,
    "semigroup": cmd_semigroup,
    "nu-table": cmd_nu_table,
    "code-table": cmd_code_table,
    "improved-table": cmd_improved_table,
    "improvements": cmd_improvements,
    "matrix": cmd_matrix,
    "improved-matrix": cmd_improved_matrix,
    "verify-function": cmd_verify_function,
    "imult": cmd_imult,
    "search-nongap": cmd_search_nongap,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--qbar", type=int, choices=(2, 3), default=None)
    common.add_argument("--orbit", choices=(O1, O2))
    common.add_argument("--ell", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--format", choices=("json", "csv", "gkmat"))
    common.add_argument("--out")
    common.add_argument("--point", help="aExp,bExp,cExp (generator powers, 'zero' for 0)")
    common.add_argument("--big", action="store_true", help="emit qbar=3 matrices")
    parser = argparse.ArgumentParser(prog="gkagc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "imult":
            p.add_argument("--f", help="plane curve, e.g. 'Y^2 + w5*Z'")
            p.add_argument("--g")
        if name == "verify-function":
            p.add_argument("--name", help="check only this generator")
        if name == "search-nongap":
            p.add_argument("--monomials", default="Z,Z^2,Y^2,Y*Z")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    args.qbar_given = args.qbar is not None
    if args.qbar is None:
        args.qbar = 2
    if args.format is None and args.command not in ("matrix", "improved-matrix"):
        args.format = "json"
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"gkagc: error: {exc}", file=sys.stderr)
        return 2
    except (InvariantError, IndependenceError, RuntimeError) as exc:
        print(f"gkagc: invariant violation: {exc}", file=sys.stderr)
        return 1
    except (ValueError, FieldError) as exc:
        print(f"gkagc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
