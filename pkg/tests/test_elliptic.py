import random

import pytest

from ffprng.galois import ParameterError, build_field, extend_field
from ffprng.elliptic import (EllipticCurve, _solve_artin_schreier, _sqrt,
                             admissible_trace, search_cyclic_curve)


@pytest.fixture(scope="module")
def e5():
    # y^2 = x^3 + x + 1 over F_5: 9 points, cyclic
    F = build_field(5, 1)
    return EllipticCurve(F, F.zero, F.zero, F.zero, F.one, F.one)


@pytest.fixture(scope="module")
def e8():
    F = build_field(2, 3)
    return search_cyclic_curve(F, 0)


def test_singular_curve_rejected():
    F = build_field(5, 1)
    with pytest.raises(ParameterError):
        EllipticCurve(F, F.zero, F.zero, F.zero, F.zero, F.zero)


def test_group_law(e5):
    pts = e5.points()
    assert len(pts) == 9
    assert pts[0] is None  # the point at infinity comes first
    rng = random.Random(1)
    sample = [pts[rng.randrange(len(pts))] for _ in range(60)]
    for i in range(0, len(sample) - 2, 3):
        P, Q, R = sample[i:i + 3]
        assert e5.add(e5.add(P, Q), R) == e5.add(P, e5.add(Q, R))
        assert e5.add(P, e5.neg(P)) is None
        assert e5.on_curve(e5.add(P, Q))


def test_group_order_and_generator(e5, e8):
    assert e5.group_order() == 9
    assert e5.frobenius_trace() == -3
    G = e5.generator()
    assert e5.point_order(G) == 9
    assert e8.group_order() == 9
    assert e8.point_order(e8.generator()) == 9


def test_smul_matches_repeated_add(e5):
    G = e5.generator()
    acc = None
    for k in range(12):
        assert e5.smul(k, G) == acc if k else acc is None
        acc = e5.add(acc, G)


def test_zeta_count_matches_enumeration(e5, e8):
    for curve, dmax in ((e5, 3), (e8, 2)):
        for d in range(1, dmax + 1):
            assert len(curve.places_of_degree(d)) == \
                curve.count_places_zeta(d)


def test_translation_orbits(e8):
    orbits = curve_orbits = e8.translation_orbits(2)
    B2 = e8.count_places_zeta(2)
    N = e8.group_order()
    assert len(orbits) == B2 // N
    for orbit in curve_orbits:
        assert len(orbit) == N


def test_valuations_at_origin(e5):
    F = e5.field
    O = e5.origin_place()
    x = e5.function((F.zero, F.one))
    y = e5.function((F.zero,), (F.one,))
    assert e5.valuation(x, O) == -2
    assert e5.valuation(y, O) == -3
    v, coeffs, K = e5.local_expansion(x, O, 6)
    assert v == -2 and coeffs[0] == K.one


def test_riemann_roch_pole_at_origin(e5):
    O = e5.origin_place()
    from ffprng.ratfield import Divisor
    for k in range(1, 6):
        basis = e5.riemann_roch_basis(Divisor({O: k}))
        assert len(basis) == k  # ell(k O) = k at genus 1


def test_riemann_roch_general_divisor(e5):
    from ffprng.ratfield import Divisor
    Q = e5.places_of_degree(2)[0]
    O = e5.origin_place()
    assert len(e5.riemann_roch_basis(Divisor({Q: 1}))) == 2
    assert len(e5.riemann_roch_basis(Divisor({Q: 1, O: 2}))) == 4


def test_pole_divisor(e5):
    F = e5.field
    x = e5.function((F.zero, F.one))
    pd = e5.pole_divisor(x)
    O = e5.origin_place()
    assert pd.get(O) == 2 and pd.degree() == 2
    y = e5.function((F.zero,), (F.one,))
    assert e5.pole_divisor(y).get(O) == 3


def test_admissible_trace_table():
    assert admissible_trace(64, 2, 6, 0)        # q = 2^6, t = 0, q % 4 = 0
    assert admissible_trace(101, 101, 1, 1)     # gcd(1, 101) = 1
    assert not admissible_trace(64, 2, 6, 2)    # gcd(2, 2) != 1, not special
    assert admissible_trace(64, 2, 6, 8)        # t = sqrt(q), p = 2 != 1 mod 3
    assert admissible_trace(8, 2, 3, 4)         # t = p^((n+1)/2) = 4
    assert not admissible_trace(27, 3, 3, 20)   # |t| > 2 sqrt(q)


def test_search_known_small_curves():
    F5 = build_field(5, 1)
    c = search_cyclic_curve(F5, 3)
    a1, a2, a3, a4, a6 = c.coeffs
    assert (a1, a2, a3) == (F5.zero, F5.zero, F5.zero)
    assert (a4, a6) == (F5.one, F5.one)  # y^2 = x^3 + x + 1, N = 9
    assert c.group_order() == 9
    F101 = build_field(101, 1)
    c2 = search_cyclic_curve(F101, 1)
    assert c2.group_order() == 103


def test_solver_helpers():
    K = build_field(3, 4)  # F_81
    rng = random.Random(2)
    for _ in range(25):
        a = K.random_element(rng)
        sq = K.mul(a, a)
        r = _sqrt(K, sq)
        assert K.mul(r, r) == sq
    K2 = build_field(2, 13)
    for _ in range(25):
        w = K2.random_element(rng)
        target = K2.add(K2.mul(w, w), w)  # w^2 + w always has trace 0
        s = _solve_artin_schreier(K2, target)
        assert K2.add(K2.mul(s, s), s) == target
