from __future__ import annotations

import numpy as np
import pytest

from gkcodes.curve import (INFINITY, O1, O2, CurvePoint, automorphism_group_order,
                           curve_params, enumerate_points, genus, get_curve, h_poly,
                           on_curve, on_hermitian_surface, orbit_census, orbit_sizes,
                           point_arrays, stabilizer_order)
from gkcodes.field import get_field


def test_genus_and_point_counts():
    assert genus(2) == 10 and genus(3) == 99
    assert curve_params(2).expected_points == 225
    assert curve_params(3).expected_points == 6076


def test_h_poly():
    # h(X) = -1 + X - X^2 (qbar=2, characteristic 2) and -1 + X^2 - X^4 + X^6 (qbar=3)
    assert h_poly(2) == [1, 1, 1]
    assert h_poly(3) == [2, 0, 1, 0, 2, 0, 1]


def test_enumeration_matches_full_scan(curve2, gf64):
    # oracle: test every (x, y, z) in GF(64)^3 against both equations
    F = gf64
    e = np.arange(64)
    X, Y, Z = (a.ravel() for a in np.meshgrid(e, e, e, indexing="ij"))
    hx = F.vpoly(h_poly(2), X)
    eq1 = F.vpow(Z, 3) == F.vmul(Y, hx)
    eq2 = F.vadd(F.vpow(X, 2), X) == F.vpow(Y, 3)
    mask = eq1 & eq2
    scanned = sorted(zip(X[mask].tolist(), Y[mask].tolist(), Z[mask].tolist()))
    listed = [(p.x, p.y, p.z) for p in curve2.points[1:]]
    assert listed == scanned
    assert curve2.points[0] == INFINITY


def test_enumeration_order_and_membership(curve3):
    pts = curve3.points
    assert len(pts) == 6076 and pts[0].is_infinite
    keys = [p.key() for p in pts[1:]]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for p in pts[:: 97]:
        assert on_curve(curve3.params, p)


def test_orbits_and_group_orders():
    assert orbit_census(get_curve(2).points) == (9, 216)
    assert orbit_census(get_curve(3).points) == (28, 6048)
    for q in (2, 3):
        sizes = orbit_sizes(q)
        for orbit in (O1, O2):
            assert sizes[orbit] * stabilizer_order(q, orbit) == automorphism_group_order(q)
    assert automorphism_group_order(2) == 648
    assert automorphism_group_order(3) == 42336


def test_hermitian_surface(curve2):
    assert all(on_hermitian_surface(curve2.params, p) for p in curve2.points[1:])
    with pytest.raises(ValueError):
        on_hermitian_surface(curve2.params, INFINITY)


def test_point_lookup(curve2):
    p = curve2.points[5]
    assert curve2.index_of(p) == 5
    assert curve2.point(p.x, p.y, p.z) == p
    assert CurvePoint(1, 1, 1) not in curve2
    with pytest.raises(ValueError):
        curve2.point(1, 1, 1)
    assert curve2.first_point(O2).z != 0
    assert curve2.first_point(O1).is_infinite


def test_point_arrays(curve2):
    xs, ys, zs = point_arrays(curve2.points)
    assert len(xs) == 224 and xs.dtype == np.int64


def test_other_primitive_polynomial_gives_maximal_curve():
    F = get_field(2, 6, (1, 1, 0, 0, 0, 0, 1))
    pts = enumerate_points(curve_params(2, F))
    assert len(pts) == 225 and orbit_census(pts) == (9, 216)


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        curve_params(2, get_field(3, 6))
