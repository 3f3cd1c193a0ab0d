"""The GK maximal curve over GF(q^2), q = qbar^3, and its rational points.

The curve lives in affine 3-space with equations

    z^(qbar^2 - qbar + 1) = y * h(x),        x^qbar + x = y^(qbar + 1),

plus a single point at infinity ``(0:1:0:0)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .field import FieldSpec, get_field

O1 = "O1"
O2 = "O2"

_PRIMES = {2: 2, 3: 3, 4: 2, 5: 5, 7: 7, 8: 2, 9: 3}


def genus(qbar: int) -> int:
    return (qbar**3 + 1) * (qbar**2 - 2) // 2 + 1


def h_poly(qbar: int) -> list[int]:
    """Coefficients (little endian, reduced mod the characteristic) of
    h(X) = sum_{i=0}^{qbar} (-1)^(i+1) X^(i(qbar-1))."""
    p = _PRIMES[qbar]
    coeffs = [0] * (qbar * (qbar - 1) + 1)
    for i in range(qbar + 1):
        coeffs[i * (qbar - 1)] = (coeffs[i * (qbar - 1)] + (-1) ** (i + 1)) % p
    return coeffs


@dataclass(frozen=True)
class CurveParams:
    qbar: int
    field: FieldSpec

    def __post_init__(self) -> None:
        p = _PRIMES.get(self.qbar)
        if p is None or self.field.p != p or self.field.order != self.qbar**6:
            raise ValueError(f"field {self.field!r} does not match qbar={self.qbar}")

    @property
    def q(self) -> int:
        return self.qbar**3

    @property
    def genus(self) -> int:
        return genus(self.qbar)

    @property
    def expected_points(self) -> int:
        q = self.q
        return q * q + 1 + 2 * self.genus * q

    @property
    def z_exponent(self) -> int:
        return self.qbar**2 - self.qbar + 1


def curve_params(qbar: int, field: Optional[FieldSpec] = None) -> CurveParams:
    if field is None:
        field = get_field(_PRIMES[qbar], 6 if qbar in (2, 3) else 0)
    return CurveParams(qbar, field)


@dataclass(frozen=True, order=False)
class CurvePoint:
    """A rational point; ``x, y, z`` are field encodings, all ``None`` at infinity."""

    x: Optional[int]
    y: Optional[int]
    z: Optional[int]

    @property
    def is_infinite(self) -> bool:
        return self.x is None

    @property
    def orbit(self) -> str:
        return O2 if (not self.is_infinite and self.z != 0) else O1

    def key(self) -> tuple:
        return (-1,) if self.is_infinite else (self.x, self.y, self.z)


INFINITY = CurvePoint(None, None, None)


def on_curve(params: CurveParams, pt: CurvePoint) -> bool:
    if pt.is_infinite:
        return True
    F = params.field
    qb = params.qbar
    hx = int(F.vpoly(h_poly(qb), np.array([pt.x]))[0])
    eq1 = F.pow(pt.z, params.z_exponent) == F.mul(pt.y, hx)
    eq2 = F.add(F.pow(pt.x, qb), pt.x) == F.pow(pt.y, qb + 1)
    return eq1 and eq2


def on_hermitian_surface(params: CurveParams, pt: CurvePoint) -> bool:
    """X^q + X = Y^(q+1) + Z^(q+1) with q = qbar^3."""
    if pt.is_infinite:
        raise ValueError("surface test is defined for affine points")
    F, q = params.field, params.q
    lhs = F.add(F.pow(pt.x, q), pt.x)
    rhs = F.add(F.pow(pt.y, q + 1), F.pow(pt.z, q + 1))
    return lhs == rhs


def enumerate_points(params: CurveParams) -> list[CurvePoint]:
    """All GF(q^2)-rational points: infinity first, then affine points sorted
    by (enc x, enc y, enc z)."""
    F = params.field
    qb = params.qbar
    elems = np.arange(F.order)
    # fibres of the additive map x -> x^qbar + x
    trace_like = F.vadd(F.vpow(elems, qb), elems)
    fibre = defaultdict(list)
    for x, v in enumerate(trace_like.tolist()):
        fibre[v].append(x)
    # roots of z^e = t
    zpow = F.vpow(elems, params.z_exponent)
    roots = defaultdict(list)
    for z, v in enumerate(zpow.tolist()):
        roots[v].append(z)
    hvals = F.vpoly(h_poly(qb), elems).tolist()
    ypow = F.vpow(elems, qb + 1).tolist()
    affine = []
    for y in range(F.order):
        for x in fibre.get(ypow[y], ()):
            t = F.mul(y, hvals[x])
            for z in roots.get(t, ()):
                affine.append((x, y, z))
    affine.sort()
    pts = [INFINITY] + [CurvePoint(x, y, z) for x, y, z in affine]
    if len(pts) != params.expected_points:
        raise RuntimeError(
            f"found {len(pts)} points, expected {params.expected_points}: curve is not maximal?"
        )
    return pts


def point_arrays(points: list[CurvePoint]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Coordinate arrays of the affine points in ``points`` (infinity skipped)."""
    aff = [p for p in points if not p.is_infinite]
    return (np.array([p.x for p in aff], dtype=np.int64),
            np.array([p.y for p in aff], dtype=np.int64),
            np.array([p.z for p in aff], dtype=np.int64))


def orbit_census(points: list[CurvePoint]) -> tuple[int, int]:
    n1 = sum(1 for p in points if p.orbit == O1)
    return n1, len(points) - n1


def orbit_sizes(qbar: int) -> dict[str, int]:
    return {O1: qbar**3 + 1, O2: qbar**3 * (qbar**3 + 1) * (qbar**2 - 1)}


def automorphism_group_order(qbar: int) -> int:
    return qbar**3 * (qbar**3 + 1) * (qbar**2 - 1) * (qbar**2 - qbar + 1)


def stabilizer_order(qbar: int, orbit: str) -> int:
    """Size of the stabiliser of a point of the given orbit (metadata only)."""
    if orbit == O1:
        return qbar**3 * (qbar**2 - 1) * (qbar**2 - qbar + 1)
    if orbit == O2:
        return qbar**2 - qbar + 1
    raise ValueError(f"unknown orbit {orbit!r}")


@dataclass
class Curve:
    """Convenience bundle: parameters plus the canonical point list."""

    params: CurveParams
    points: list[CurvePoint] = field(default_factory=list)

    @classmethod
    def build(cls, qbar: int, field: Optional[FieldSpec] = None) -> "Curve":
        params = curve_params(qbar, field)
        return cls(params, enumerate_points(params))

    @property
    def field(self) -> FieldSpec:
        return self.params.field

    def index_of(self, pt: CurvePoint) -> int:
        return self._index[pt.key()]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p.key(): i for i, p in enumerate(self.points)}
            self.__dict__["_idx"] = idx
        return idx

    def __contains__(self, pt: CurvePoint) -> bool:
        return pt.key() in self._index

    def point(self, x: int, y: int, z: int) -> CurvePoint:
        pt = CurvePoint(x, y, z)
        if pt not in self:
            raise ValueError(f"{pt} is not a rational point of the curve")
        return pt

    def first_point(self, orbit: str) -> CurvePoint:
        return next(p for p in self.points if p.orbit == orbit)


_CURVES: dict[tuple, Curve] = {}


def get_curve(qbar: int, field: Optional[FieldSpec] = None) -> Curve:
    params = curve_params(qbar, field)
    key = (qbar, params.field)
    if key not in _CURVES:
        _CURVES[key] = Curve(params, enumerate_points(params))
    return _CURVES[key]
