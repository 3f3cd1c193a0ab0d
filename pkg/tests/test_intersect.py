from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gkcodes.curve import O2, CurvePoint
from gkcodes.field import get_field
from gkcodes.funcfield import base_point, gamma_expansion, gamma_point
from gkcodes.intersect import (INFINITE, IntersectError, PlaneCurve, c1_curve,
                               certify_function, certify_nongap, format_poly,
                               imult_origin, linear_system, parse_poly,
                               projective_representatives, search_nongaps)

F64 = get_field(2, 6)
F729 = get_field(3, 6)


def poly(F, terms):
    return PlaneCurve(F, terms)


def prime_terms(p, max_deg=4, max_terms=5):
    """Polynomials with prime-field coefficients, so sympy can act as an oracle."""
    mono = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    return st.dictionaries(mono, st.integers(1, p - 1), min_size=1, max_size=max_terms)


def general_terms(F, max_deg=3):
    mono = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    return st.dictionaries(mono, st.integers(1, F.order - 1), min_size=1, max_size=4)


def _oracle_graph(p, pz, g_terms):
    """I(Y - p(Z), G) = ord_Z G(p(Z), Z) for a smooth branch through O."""
    Z = sympy.symbols("Z")
    branch = sum(c * Z**k for k, c in pz.items())
    G = sum(c * branch**i * Z**j for (i, j), c in g_terms.items())
    P = sympy.Poly(sympy.expand(G), Z, modulus=p)
    if P.is_zero:
        return INFINITE
    coeffs = list(reversed(P.all_coeffs()))
    return next(k for k, c in enumerate(coeffs) if int(c) % p)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3]), st.dictionaries(st.integers(1, 4), st.integers(1, 2), max_size=3),
       prime_terms(3))
def test_against_sympy_substitution(p, pz, g_terms):
    F = F64 if p == 2 else F729
    pz = {k: c % p for k, c in pz.items() if c % p}
    g_terms = {k: c % p for k, c in g_terms.items() if c % p}
    if not g_terms:
        return
    branch = {(1, 0): 1}
    for k, c in pz.items():
        branch[(0, k)] = F.neg(c)
    got = imult_origin(poly(F, branch), poly(F, g_terms))
    assert got == _oracle_graph(p, pz, g_terms)


@settings(max_examples=150, deadline=None)
@given(general_terms(F64), general_terms(F64))
def test_symmetry(f, g):
    assert imult_origin(poly(F64, f), poly(F64, g)) == imult_origin(poly(F64, g), poly(F64, f))


@settings(max_examples=100, deadline=None)
@given(general_terms(F729), general_terms(F729), general_terms(F729))
def test_additivity_and_lower_bound(f, g, h):
    Fc, Gc, Hc = poly(F729, f), poly(F729, g), poly(F729, h)
    a, b = imult_origin(Fc, Gc), imult_origin(Fc, Hc)
    both = imult_origin(Fc, Gc * Hc)
    if a is INFINITE or b is INFINITE:
        assert both is INFINITE
    else:
        assert both == a + b
        assert a >= Fc.order_at_origin() * Gc.order_at_origin()


def test_basic_values():
    Y, Z = poly(F64, {(1, 0): 1}), poly(F64, {(0, 1): 1})
    assert imult_origin(Y, Z) == 1
    assert imult_origin(Y, poly(F64, {(1, 0): 1, (0, 3): 1})) == 3
    assert imult_origin(poly(F64, {(0, 0): 1, (1, 0): 1}), Z) == 0
    assert imult_origin(Y, Y * Z) is INFINITE
    # shared component Y with a unit cofactor on one side
    f = poly(F64, {(1, 0): 25, (1, 2): 7, (1, 3): 7})
    g = poly(F64, {(2, 3): 58, (2, 0): 11, (1, 2): 52})
    assert imult_origin(f, g) is INFINITE and imult_origin(g, f) is INFINITE
    # cusp against its tangent line: Y^2 = Z^3 meets Y = 0 with multiplicity 3
    cusp = poly(F729, {(2, 0): 1, (0, 3): 2})
    assert imult_origin(cusp, poly(F729, {(1, 0): 1})) == 3
    assert imult_origin(cusp, poly(F729, {(0, 1): 1})) == 2


def test_parse_and_format_roundtrip():
    p = parse_poly("w5*Y^2 + 3*Z + Y*Z + 1", F64)
    assert p.terms == {(2, 0): F64.gen_pow(5), (0, 1): 1, (1, 1): 1, (0, 0): 1}
    assert parse_poly(format_poly(p), F64).terms == p.terms
    with pytest.raises(IntersectError):
        parse_poly("Y^^2", F64)
    with pytest.raises(IntersectError):
        parse_poly("", F64)


def test_projective_representatives():
    reps = list(projective_representatives(4, 3))
    assert len(reps) == (4**3 - 1) // 3
    assert reps == sorted(reps)
    assert all(r[next(i for i, c in enumerate(r) if c)] == 1 for r in reps)


def test_frame_certificates_qbar2(curve2):
    base = base_point(2, O2, curve=curve2)
    expected = {"xb": (0, 9), "yb": (1, 8), "zb": (2, 7), "beta": (5, 13)}
    for gen in base.generators:
        rep = certify_function(curve2, base.point, gen.expansion)
        assert (rep.M, rep.N) == expected[gen.name]
        lo, hi = rep.bracket
        assert lo <= rep.N <= hi
        assert rep.to_dict()["N"] == rep.N


def test_certificates_qbar3(curve3):
    P = gamma_point(curve3)
    rep = certify_function(curve3, P, gamma_expansion(curve3))
    assert (rep.M, rep.N, rep.m) == (19, 121, 5)
    base = base_point(3, O2, curve=curve3)
    Ns = [certify_function(curve3, P, g.expansion).N for g in base.generators]
    assert Ns == [28, 27, 25, 74, 121]


def test_c1_vanishes_at_origin_and_rejects_foreign_points(curve2):
    P = base_point(2, O2, curve=curve2).point
    c1 = c1_curve(curve2, P)
    assert c1(0, 0) == 0
    with pytest.raises(IntersectError):
        c1_curve(curve2, CurvePoint(1, 1, 1))


def test_certify_nongap_errors(curve2):
    P = base_point(2, O2, curve=curve2).point
    with pytest.raises(IntersectError):
        certify_nongap(curve2, P, [(0, 1)], [0])
    with pytest.raises(IntersectError):
        certify_nongap(curve2, P, [(0, 1), (0, 1)], [1, 1])
    system = linear_system(curve2, P, [(0, 1), (0, 2), (2, 0), (1, 1)])
    assert system.m == 2 and system.v == 3


def test_search_restricted_to_small_field(curve3):
    with pytest.raises(IntersectError):
        search_nongaps(curve3, gamma_point(curve3), [(0, 1)])


def test_small_search(curve2):
    P = base_point(2, O2, curve=curve2).point
    found = search_nongaps(curve2, P, [(0, 0), (1, 0), (0, 1)])
    assert sorted(found) == [7, 8, 9]
