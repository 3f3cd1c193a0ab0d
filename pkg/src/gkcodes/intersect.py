"""Local intersection multiplicity of plane curves at the origin, and the
non-gap certificates derived from it.

Polynomials are in two variables ``Y`` and ``Z`` over a finite field and are
stored as ``{(i, j): coeff}`` for the monomial ``Y^i Z^j``.

The multiplicity is computed with Fulton's axiomatic reduction: restrict
both curves to ``Z = 0``; if one restriction vanishes then ``Z`` divides
that curve and additivity peels it off, otherwise the restriction of
higher degree is reduced against the other.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .curve import Curve, CurvePoint, get_curve
from .field import FieldSpec
from .funcfield import RationalFunction


class IntersectError(ValueError):
    pass


class _Infinite:
    """Multiplicity of curves sharing a component through the origin."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "inf"


INFINITE = _Infinite()

Monomial = tuple[int, int]


@dataclass
class PlaneCurve:
    field: FieldSpec
    terms: dict[Monomial, int]

    def __post_init__(self) -> None:
        self.terms = {k: int(v) for k, v in self.terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def order_at_origin(self) -> int:
        """Multiplicity of the origin on the curve (lowest total degree)."""
        if not self.terms:
            raise IntersectError("zero polynomial")
        return min(i + j for i, j in self.terms)

    def __mul__(self, other: "PlaneCurve") -> "PlaneCurve":
        return PlaneCurve(self.field, _pmul(self.field, self.terms, other.terms))

    def __add__(self, other: "PlaneCurve") -> "PlaneCurve":
        add = self.field.lists[0]
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = add[out.get(k, 0)][v]
        return PlaneCurve(self.field, out)

    def __call__(self, y: int, z: int) -> int:
        F = self.field
        acc = 0
        for (i, j), c in self.terms.items():
            acc = F.add(acc, F.mul(c, F.mul(F.pow(y, i), F.pow(z, j))))
        return acc

    def __str__(self) -> str:
        return format_poly(self)


def _pmul(F: FieldSpec, a: dict, b: dict) -> dict:
    add, mul = F.lists[0], F.lists[1]
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = add[out.get(k, 0)][mul[c1][c2]]
    return {k: v for k, v in out.items() if v}


def _restriction(terms: dict) -> tuple[int, int, int]:
    """(degree, leading coeff, lowest degree) of P(Y, 0); degree -1 if it vanishes."""
    deg, low, lead = -1, None, 0
    for (i, j), c in terms.items():
        if j == 0:
            if i > deg:
                deg, lead = i, c
            if low is None or i < low:
                low = i
    return deg, lead, (low if low is not None else -1)


def imult_origin(F_: PlaneCurve, G_: PlaneCurve):
    """Intersection number of F = 0 and G = 0 at (0, 0); ``INFINITE`` when they
    share a component through the origin."""
    if F_.is_zero() or G_.is_zero():
        raise IntersectError("zero polynomial")
    K = F_.field
    add, mul, neg = K.lists[0], K.lists[1], K.lists[2]
    f, g = dict(F_.terms), dict(G_.terms)
    # Bezout: without a common component the answer is at most deg F * deg G,
    # and a shared component makes the running total grow without bound
    bezout = F_.degree * G_.degree
    total = 0
    while True:
        if not f or not g or total > bezout:
            return INFINITE
        if f.get((0, 0), 0) or g.get((0, 0), 0):
            return total
        r, lf, _ = _restriction(f)
        s, lg, low_g = _restriction(g)
        if r < 0 and s < 0:
            return INFINITE  # Z divides both
        if s < 0 or (r >= 0 and r > s):
            f, g = g, f
            r, lf, s, lg = s, lg, r, lf
            low_g = _restriction(g)[2]
        if r < 0:
            # Z | f: I(Z, g) + I(f / Z, g)
            total += low_g
            f = {(i, j - 1): c for (i, j), c in f.items()}
            continue
        # 1 <= r <= s: g <- lf * g - lg * Y^(s - r) * f lowers deg g(Y, 0)
        shift = s - r
        nlg = neg[lg]
        new = {k: mul[lf][c] for k, c in g.items()}
        for (i, j), c in f.items():
            k = (i + shift, j)
            new[k] = add[new.get(k, 0)][mul[nlg][c]]
        g = {k: c for k, c in new.items() if c}


# ---------------------------------------------------------------------------
# the plane curve C1 and certificates


def c1_curve(curve: Curve, P: CurvePoint) -> PlaneCurve:
    """(a + b^qbar Y - Z)^qbar + (a + b^qbar Y - Z) - (b + Y)^(qbar+1)."""
    if P.is_infinite or P.z == 0:
        raise IntersectError("base point must be affine with z != 0")
    F = curve.field
    qb = curve.params.qbar
    a, b = P.x, P.y
    lin = PlaneCurve(F, {(0, 0): a, (1, 0): F.pow(b, qb), (0, 1): F.neg(1)})
    yb = PlaneCurve(F, {(0, 0): b, (1, 0): 1})
    out = lin + _ppow(lin, qb)
    minus = _ppow(yb, qb + 1)
    res = out + PlaneCurve(F, {k: F.neg(v) for k, v in minus.terms.items()})
    if res.terms.get((0, 0), 0):
        raise IntersectError("P not on curve")
    return res


def _ppow(p: PlaneCurve, e: int) -> PlaneCurve:
    out = PlaneCurve(p.field, {(0, 0): 1})
    for _ in range(e):
        out = out * p
    return out


@dataclass
class LinearSystem:
    """Monomials g_0..g_v in Y, Z with the data entering the non-gap bracket."""

    monomials: tuple[Monomial, ...]
    m: int
    vO_E: int

    @property
    def v(self) -> int:
        return len(self.monomials) - 1


@dataclass
class IntersectionReport:
    M: int
    N: int
    m: int
    combination: tuple[int, ...]
    monomials: tuple[Monomial, ...]
    vO_E: int
    bracket: tuple[int, int] = field(default=(0, 0))

    def to_dict(self) -> dict:
        return {"M": self.M, "N": self.N, "m": self.m, "vO_E": self.vO_E,
                "bracket": list(self.bracket), "combination": list(self.combination),
                "monomials": [list(t) for t in self.monomials]}


def linear_system(curve: Curve, P: CurvePoint, monomials: Sequence[Monomial],
                  m: Optional[int] = None, c1: Optional[PlaneCurve] = None) -> LinearSystem:
    monomials = tuple(tuple(t) for t in monomials)
    if len(set(monomials)) != len(monomials):
        raise IntersectError("monomials must be distinct")
    c1 = c1 or c1_curve(curve, P)
    F = curve.field
    if m is None:
        m = max(i + j for i, j in monomials)
    vals = [imult_origin(c1, PlaneCurve(F, {t: 1})) for t in monomials]
    if any(v is INFINITE for v in vals):
        raise IntersectError("common component")
    return LinearSystem(monomials, m, -min(vals))


def certify_nongap(curve: Curve, P: CurvePoint, monomials: Sequence[Monomial],
                   coeffs: Sequence[int], m: Optional[int] = None) -> IntersectionReport:
    """M = I_O(C1, sum l_i g_i) and the non-gap N = m (qbar^3 + 1) - M."""
    if len(monomials) != len(coeffs):
        raise IntersectError("one coefficient per monomial")
    if not any(coeffs):
        raise IntersectError("zero combination")
    qb = curve.params.qbar
    c1 = c1_curve(curve, P)
    system = linear_system(curve, P, monomials, m, c1)
    F = curve.field
    comb = PlaneCurve(F, {t: c for t, c in zip(system.monomials, coeffs)})
    M = imult_origin(c1, comb)
    if M is INFINITE:
        raise IntersectError("common component")
    N = system.m * (qb**3 + 1) - M
    lo, hi = system.m * (qb**3 - qb), system.m * (qb**3 + 1) + system.vO_E
    if not lo <= N <= hi:
        raise IntersectError(f"N={N} outside [{lo}, {hi}]")
    return IntersectionReport(M, N, system.m, tuple(int(c) for c in coeffs),
                              system.monomials, system.vO_E, (lo, hi))


def function_to_combination(f: RationalFunction) -> tuple[list[Monomial], list[int], int]:
    """Split a homogeneous polynomial in (xb, yb, zb) into Y, Z monomials
    (setting the first coordinate to 1), their coefficients and the degree m."""
    if f.names[:3] != ("xb", "yb", "zb") or len(f.names) != 3:
        raise IntersectError("expected a polynomial in xb, yb, zb")
    degs = {sum(e) for e in f.terms}
    if len(degs) != 1:
        raise IntersectError("combination must be homogeneous")
    items = sorted(f.terms.items())
    monos = [(e[1], e[2]) for e, _ in items]
    return monos, [c for _, c in items], degs.pop()


def certify_function(curve: Curve, P: CurvePoint, f: RationalFunction) -> IntersectionReport:
    monos, coeffs, m = function_to_combination(f)
    return certify_nongap(curve, P, monos, coeffs, m)


def projective_representatives(size: int, length: int) -> Iterable[tuple[int, ...]]:
    """Points of P^(length-1)(GF(size)) normalised with first nonzero entry 1,
    in increasing lexicographic order."""
    for lead in range(length - 1, -1, -1):
        for rest in itertools.product(range(size), repeat=length - 1 - lead):
            yield (0,) * lead + (1,) + rest


def search_nongaps(curve: Curve, P: CurvePoint, monomials: Sequence[Monomial],
                   m: Optional[int] = None) -> dict[int, tuple[int, ...]]:
    """Run every combination of the linear system (up to scalars) and return
    {N: lexicographically least witness coefficient vector}."""
    qb = curve.params.qbar
    if qb != 2:
        raise IntersectError("exhaustive search is only tractable for qbar = 2")
    c1 = c1_curve(curve, P)
    system = linear_system(curve, P, monomials, m, c1)
    F = curve.field
    found: dict[int, tuple[int, ...]] = {}
    monos = system.monomials
    for coeffs in projective_representatives(F.order, len(monos)):
        comb = PlaneCurve(F, {t: c for t, c in zip(monos, coeffs)})
        M = imult_origin(c1, comb)
        if M is INFINITE:
            continue
        if M not in found or coeffs < found[M]:
            found[M] = coeffs
    if len(found) < len(monos):
        raise IntersectError("monomials dependent on C1")
    if len(found) > len(monos):
        raise IntersectError(f"found {len(found)} multiplicities for {len(monos)} monomials")
    scale = system.m * (qb**3 + 1)
    return {scale - M: w for M, w in sorted(found.items(), reverse=True)}


# ---------------------------------------------------------------------------
# ASCII polynomial grammar:  term ('+' term)*,  term = factor ('*' factor)*,
# factor = 'w<k>' | integer | 'Y' | 'Y^i' | 'Z' | 'Z^j'

_FACTOR = re.compile(r"^(?:w(\d+)|(\d+)|([YZ])(?:\^(\d+))?)$")


def parse_poly(text: str, F: FieldSpec) -> PlaneCurve:
    terms: dict = {}
    text = text.replace(" ", "")
    if not text:
        raise IntersectError("empty polynomial")
    for term in text.split("+"):
        coeff, i, j = 1, 0, 0
        for fac in term.split("*"):
            mt = _FACTOR.match(fac)
            if not mt:
                raise IntersectError(f"cannot parse factor {fac!r}")
            wk, n, var, e = mt.groups()
            if wk is not None:
                coeff = F.mul(coeff, F.gen_pow(int(wk)))
            elif n is not None:
                coeff = F.mul(coeff, F.from_int(int(n)))
            else:
                e = int(e) if e else 1
                if var == "Y":
                    i += e
                else:
                    j += e
        terms[(i, j)] = F.add(terms.get((i, j), 0), coeff)
    return PlaneCurve(F, terms)


def format_poly(p: PlaneCurve) -> str:
    F = p.field
    parts = []
    for (i, j), c in sorted(p.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
        fac = []
        if c != 1 or (i == 0 and j == 0):
            fac.append(str(c) if c < F.p else f"w{int(F.log_table[c])}")
        if i:
            fac.append("Y" if i == 1 else f"Y^{i}")
        if j:
            fac.append("Z" if j == 1 else f"Z^{j}")
        parts.append("*".join(fac))
    return " + ".join(parts) if parts else "0"


def default_curve(qbar: int) -> Curve:
    return get_curve(qbar)
