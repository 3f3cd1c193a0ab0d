"""Rational points of the GK curve over GF(64) and GF(729).

Both curves are maximal, so the point count is forced by the genus.  Points
split into two automorphism orbits: the z = 0 points (plus infinity) and the
rest.
"""

from __future__ import annotations

from gkcodes.curve import (automorphism_group_order, get_curve, on_hermitian_surface,
                           orbit_census)

for qbar in (2, 3):
    curve = get_curve(qbar)
    p = curve.params
    print(f"qbar={qbar}: GF({p.field.order}), genus {p.genus}")
    print(f"  q^2 + 1 + 2gq = {p.expected_points}, enumerated {len(curve.points)}")
    print(f"  orbit sizes {orbit_census(curve.points)}, |Aut| = {automorphism_group_order(qbar)}")
    on_surface = all(on_hermitian_surface(p, pt) for pt in curve.points[1:])
    print(f"  every affine point lies on the Hermitian surface: {on_surface}")

# a few points, coordinates written as powers of the generator
F = get_curve(2).field
for pt in get_curve(2).points[1:6]:
    fmt = ["0" if v == 0 else f"w^{int(F.log_table[v])}" for v in (pt.x, pt.y, pt.z)]
    print(f"  ({', '.join(fmt)})  orbit {pt.orbit}")
