"""Explicit rational functions with prescribed poles at one rational point.

For the point at infinity the coordinate functions ``x, y, z`` already
have their only poles there.  For an affine point ``P = (a, b, c)`` with
``c != 0`` the barred coordinates

    xb = 1 / L,  yb = (y - b) / L,  zb = (-a^qbar - x + b^qbar y) / L,
    L  = -a^(qbar^3) - x + b^(qbar^3) y + c^(qbar^3) z

are the affine coordinates after the projective change of frame that
sends ``P`` to infinity, and the extra generators (``beta``, ``gamma``)
are fixed polynomials in them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .curve import O1, O2, INFINITY, Curve, CurvePoint, get_curve, h_poly
from .field import FieldSpec
from .semigroup import NumericalSemigroup, gk_semigroup, rho


class FuncFieldError(ValueError):
    pass


# gamma at the designated qbar = 3 point: (w-exponent or None for the integer 2,
# exponents of xb, yb, zb)
GAMMA_TERMS = (
    (588, (2, 3, 0)), (336, (4, 0, 1)), (448, (3, 1, 1)), (560, (2, 2, 1)),
    (700, (3, 0, 2)), (112, (1, 3, 1)), (112, (2, 1, 2)), (84, (1, 2, 2)),
    (196, (2, 0, 3)), (None, (0, 3, 2)), (392, (1, 1, 3)), (28, (0, 2, 3)),
    (504, (1, 0, 4)), (644, (0, 1, 4)), (280, (0, 0, 5)),
)
GAMMA_POINT_EXPONENTS = (11, 280, 88)


@dataclass
class RationalFunction:
    """Polynomial in named generator functions with field coefficients.

    ``terms`` maps exponent vectors (one entry per name) to coefficient
    encodings; zero coefficients are never stored.
    """

    field: FieldSpec
    names: tuple[str, ...]
    pole_orders: tuple[int, ...]
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, fld, names, pole_orders, exps, coeff: int = 1) -> "RationalFunction":
        return cls(fld, tuple(names), tuple(pole_orders), {tuple(exps): coeff})

    @property
    def pole_order(self) -> int:
        """Largest weighted degree among the terms (0 for constants, -1 for zero).

        Exact for a single monomial; for sums the stated order of a named
        generator is authoritative and is certified separately.
        """
        if not self.terms:
            return -1
        return max(sum(e * d for e, d in zip(exps, self.pole_orders)) for exps in self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _compatible(self, other: "RationalFunction") -> None:
        if other.names != self.names or other.field != self.field:
            raise FuncFieldError("functions over different generator sets")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._compatible(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, 0), c)
        return RationalFunction(F, self.names, self.pole_orders, out)

    def __mul__(self, other) -> "RationalFunction":
        F = self.field
        if isinstance(other, int):
            return RationalFunction(F, self.names, self.pole_orders,
                                    {e: F.mul(c, other) for e, c in self.terms.items()})
        self._compatible(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return RationalFunction(F, self.names, self.pole_orders, out)

    def evaluate_values(self, values: np.ndarray) -> np.ndarray:
        """Evaluate at many points given generator values, shape (len(names), n)."""
        F = self.field
        values = np.asarray(values)
        acc = np.zeros(values.shape[1:], dtype=np.int32)
        for exps, c in self.terms.items():
            term = np.full(values.shape[1:], c, dtype=np.int32)
            for i, e in enumerate(exps):
                if e:
                    term = F.vmul(term, F.vpow(values[i], e))
            acc = F.vadd(acc, term)
        return acc

    def __str__(self) -> str:
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mon = "*".join(f"{n}^{e}" if e > 1 else n for n, e in zip(self.names, exps) if e)
            coeff = _fmt_coeff(self.field, c)
            parts.append(mon if coeff == "1" and mon else (f"{coeff}*{mon}" if mon else coeff))
        return " + ".join(parts) if parts else "0"


def _fmt_coeff(F: FieldSpec, c: int) -> str:
    if c < F.p:
        return str(c)
    return f"w{int(F.log_table[c])}"


@dataclass
class GeneratorFunction:
    name: str
    pole_order: int
    definition: str
    # expression in the coordinate functions of the base point's frame
    expansion: RationalFunction


@dataclass
class BasePoint:
    """A rational point together with functions generating its Weierstrass semigroup."""

    curve: Curve
    point: CurvePoint
    generators: list[GeneratorFunction]

    @property
    def orbit(self) -> str:
        return self.point.orbit

    @property
    def qbar(self) -> int:
        return self.curve.params.qbar

    @property
    def field(self) -> FieldSpec:
        return self.curve.field

    @property
    def pole_orders(self) -> tuple[int, ...]:
        return tuple(g.pole_order for g in self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def semigroup(self) -> NumericalSemigroup:
        return gk_semigroup(self.qbar, self.orbit)

    @property
    def evaluation_points(self) -> list[CurvePoint]:
        """The canonical point list with the base point removed."""
        return [p for p in self.curve.points if p != self.point]

    # -- coordinate functions ---------------------------------------------
    def coordinate_values(self, points: Sequence[CurvePoint]) -> np.ndarray:
        """Values of the three frame coordinates at ``points``, shape (3, n)."""
        F = self.field
        if self.point.is_infinite:
            if any(p.is_infinite for p in points):
                raise FuncFieldError("pole: evaluation at the base point")
            return np.array([[p.x for p in points], [p.y for p in points],
                             [p.z for p in points]], dtype=np.int32).reshape(3, len(points))
        T, X, Y, Z = phi(self.curve, self.point, points)
        if np.any((T == 0) & (X == 0) & (Y == 0) & (Z == 0)):
            raise FuncFieldError("degenerate image")
        bad = T == 0
        if np.any(bad):
            at_p = [points[i] == self.point for i in np.nonzero(bad)[0]]
            if any(at_p):
                raise FuncFieldError("pole: evaluation at the base point")
            raise FuncFieldError("unexpected zero denominator")
        tinv = F.inv_table[T]
        return np.stack([F.vmul(X, tinv), F.vmul(Y, tinv), F.vmul(Z, tinv)])

    def generator_values(self, points: Sequence[CurvePoint]) -> np.ndarray:
        coords = self.coordinate_values(points)
        return np.stack([g.expansion.evaluate_values(coords) for g in self.generators])

    def evaluate(self, f: RationalFunction, Q: CurvePoint):
        if f.names != self.names:
            raise FuncFieldError("function is not expressed in this base point's generators")
        vals = self.generator_values([Q])
        return self.field(int(f.evaluate_values(vals)[0]))

    def evaluate_many(self, f: RationalFunction, points: Sequence[CurvePoint]) -> np.ndarray:
        return f.evaluate_values(self.generator_values(points))

    # -- bases ---------------------------------------------------------------
    def constant(self, c: int = 1) -> RationalFunction:
        return RationalFunction.monomial(self.field, self.names, self.pole_orders,
                                         (0,) * len(self.generators), c)

    def lseries_basis(self, ell: int) -> list[RationalFunction]:
        return lseries_basis(self.semigroup, self, ell)


# ---------------------------------------------------------------------------
# the change of frame


def phi(curve: Curve, P: CurvePoint, points: Sequence[CurvePoint]):
    """Projective images (T', X', Y', Z') of ``points`` under the frame change
    sending P to the point at infinity.  Affine points are taken with T = 1."""
    F = curve.field
    qb = curve.params.qbar
    q = qb**3
    a, b, c = P.x, P.y, P.z
    aq, bq = F.pow(a, qb), F.pow(b, qb)
    aQ, bQ, cQ = F.pow(a, q), F.pow(b, q), F.pow(c, q)
    n = len(points)
    Tin = np.array([0 if p.is_infinite else 1 for p in points], dtype=np.int32)
    Xin = np.array([1 if p.is_infinite else p.x for p in points], dtype=np.int32)
    Yin = np.array([0 if p.is_infinite else p.y for p in points], dtype=np.int32)
    Zin = np.array([0 if p.is_infinite else p.z for p in points], dtype=np.int32)
    m, ad, ng = F.vmul, F.vadd, F.neg_table
    T = ad(ad(m(F.neg(aQ), Tin), ng[Xin]), ad(m(bQ, Yin), m(cQ, Zin)))
    X = Tin
    Y = ad(m(F.neg(b), Tin), Yin)
    Z = ad(ad(m(F.neg(aq), Tin), ng[Xin]), m(bq, Yin))
    assert T.shape == (n,)
    return T.astype(np.int32), X.astype(np.int32), Y.astype(np.int32), Z.astype(np.int32)


def phi_image_equations(curve: Curve, P: CurvePoint, image) -> tuple[np.ndarray, np.ndarray]:
    """Check the two equations of the transformed curve at images with X' = 1.

    Returns boolean arrays (first equation holds, second holds).
    """
    F = curve.field
    qb = curve.params.qbar
    q = qb**3
    a, b, c = P.x, P.y, P.z
    T, X, Y, Z = (np.asarray(v) for v in image)
    m, ad, ng = F.vmul, F.vadd, F.neg_table
    cQi = F.inv(F.pow(c, q))
    bq = F.pow(b, qb)
    coefY = F.mul(F.sub(bq, F.pow(b, q)), cQi)
    lin = ad(ad(m(cQi, T), m(c, X)), ad(m(coefY, Y), ng[m(cQi, Z)]))
    lhs1 = F.vpow(lin, qb * qb - qb + 1)
    u = ad(ad(m(a, X), m(bq, Y)), ng[Z])          # original x
    v = ad(m(b, X), Y)                             # original y
    hco = h_poly(qb)
    # dehomogenised in the original frame: valid for representatives with X' = 1
    rhs1 = m(v, F.vpoly(hco, u))
    lhs2 = ad(m(X, F.vpow(u, qb)), m(F.vpow(X, qb), u))
    rhs2 = F.vpow(v, qb + 1)
    return lhs1 == rhs1, lhs2 == rhs2


# ---------------------------------------------------------------------------
# generator functions


def _coord_fn(F, names, orders, idx) -> RationalFunction:
    exps = [0, 0, 0]
    exps[idx] = 1
    return RationalFunction.monomial(F, names, orders, exps)


def o1_generators(curve: Curve) -> list[GeneratorFunction]:
    qb = curve.params.qbar
    F = curve.field
    names = ("x", "y", "z")
    orders = (qb**3 + 1, qb**3 - qb**2 + qb, qb**3)
    return [GeneratorFunction(n, d, f"coordinate function {n}", _coord_fn(F, names, orders, i))
            for i, (n, d) in enumerate(zip(names, orders))]


def beta_expansion(curve: Curve, P: CurvePoint) -> RationalFunction:
    """The extra generator in xb, yb, zb for qbar in {2, 3}."""
    F = curve.field
    qb = curve.params.qbar
    names = ("xb", "yb", "zb")
    orders = (qb**3 + 1, qb**3, qb**3 - qb + 1)
    c = P.z
    ci = lambda k: F.pow(c, -k)  # noqa: E731
    if qb == 2:
        terms = {
            (1, 0, 1): 1,
            (0, 0, 2): F.add(ci(9), 1),
            (0, 2, 0): F.pow(c, 3),
            (0, 1, 1): ci(3),
        }
    elif qb == 3:
        terms = {
            (2, 0, 1): 1,
            (1, 0, 2): ci(28),
            (1, 1, 1): ci(7),
            (0, 2, 1): ci(14),
            (0, 0, 3): F.add(1, ci(56)),
            (0, 1, 2): F.mul(2, ci(35)),
            (0, 3, 0): F.mul(2, F.pow(c, 7)),
        }
    else:
        raise FuncFieldError(f"no extra generator known for qbar={qb}")
    return RationalFunction(F, names, orders, terms)


def gamma_point(curve: Curve) -> CurvePoint:
    F = curve.field
    a, b, c = (F.w_pow(k) for k in GAMMA_POINT_EXPONENTS)
    return curve.point(a, b, c)


def gamma_expansion(curve: Curve) -> RationalFunction:
    F = curve.field
    names = ("xb", "yb", "zb")
    orders = (28, 27, 25)
    terms: dict = {}
    for wexp, exps in GAMMA_TERMS:
        coeff = 2 if wexp is None else F.w_pow(wexp)
        terms[exps] = F.add(terms.get(exps, 0), coeff)
    return RationalFunction(F, names, orders, terms)


def o2_generators(curve: Curve, P: CurvePoint, include_gamma: Optional[bool] = None
                  ) -> list[GeneratorFunction]:
    """Generators xb, yb, zb, beta (and gamma for qbar = 3 at the designated point)."""
    if P.is_infinite or P.z == 0:
        raise FuncFieldError("wrong orbit: base point must have z != 0")
    if P not in curve:
        raise FuncFieldError("base point is not on the curve")
    qb = curve.params.qbar
    F = curve.field
    names = ("xb", "yb", "zb")
    orders = (qb**3 + 1, qb**3, qb**3 - qb + 1)
    gens = [
        GeneratorFunction("xb", orders[0], "1/L", _coord_fn(F, names, orders, 0)),
        GeneratorFunction("yb", orders[1], "(y - b)/L", _coord_fn(F, names, orders, 1)),
        GeneratorFunction("zb", orders[2], "(-a^qbar - x + b^qbar*y)/L",
                          _coord_fn(F, names, orders, 2)),
    ]
    if qb in (2, 3):
        beta = beta_expansion(curve, P)
        gens.append(GeneratorFunction("beta", 13 if qb == 2 else 74, str(beta), beta))
    if qb == 3:
        designated = P == gamma_point(curve)
        if include_gamma is None:
            include_gamma = designated
        if include_gamma:
            if not designated:
                raise FuncFieldError("gamma known only at the designated point")
            gamma = gamma_expansion(curve)
            gens.append(GeneratorFunction("gamma", 121, str(gamma), gamma))
    return gens


def default_base_point(qbar: int, orbit: str, curve: Optional[Curve] = None) -> CurvePoint:
    curve = curve or get_curve(qbar)
    if orbit == O1:
        return INFINITY
    if qbar == 3:
        return gamma_point(curve)
    return curve.first_point(O2)


def base_point(qbar: int, orbit: str, point: Optional[CurvePoint] = None,
               curve: Optional[Curve] = None) -> BasePoint:
    curve = curve or get_curve(qbar)
    if point is None:
        point = default_base_point(qbar, orbit, curve)
    if point.orbit != orbit:
        raise FuncFieldError(f"point {point} is not in orbit {orbit}")
    if orbit == O1:
        if not point.is_infinite:
            raise FuncFieldError("O1 codes are built at the point at infinity")
        return BasePoint(curve, point, o1_generators(curve))
    return BasePoint(curve, point, o2_generators(curve, point))


# ---------------------------------------------------------------------------
# bases of L(rho P)


def factor_pole_order(value: int, orders: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically greatest exponent vector, with generators taken from
    the largest pole order down, such that sum e_i * orders_i == value."""
    idx = sorted(range(len(orders)), key=lambda i: (-orders[i], i))

    def rec(rem: int, k: int) -> Optional[list[int]]:
        if k == len(idx):
            return [] if rem == 0 else None
        d = orders[idx[k]]
        for e in range(rem // d, -1, -1):
            tail = rec(rem - e * d, k + 1)
            if tail is not None:
                return [e] + tail
        return None

    found = rec(value, 0)
    if found is None:
        return None
    exps = [0] * len(orders)
    for k, e in zip(idx, found):
        exps[k] = e
    return tuple(exps)


def lseries_basis(S: NumericalSemigroup, base: BasePoint, ell: int) -> list[RationalFunction]:
    """Monomials f_1, ..., f_ell in the generator functions with pole orders
    rho_1 < ... < rho_ell."""
    if ell < 1:
        raise FuncFieldError("ell must be at least 1")
    out = []
    for i in range(1, ell + 1):
        r = rho(S, i)
        exps = factor_pole_order(r, base.pole_orders)
        if exps is None:
            missing = set(S.generators) - set(base.pole_orders)
            if base.qbar == 3 and 121 in missing:
                raise FuncFieldError("gamma known only at the designated point")
            raise FuncFieldError(f"non-gap {r} is not a product of the generator functions")
        out.append(RationalFunction.monomial(base.field, base.names, base.pole_orders, exps))
    return out
