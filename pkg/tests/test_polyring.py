import random
from functools import reduce

import pytest

from ffprng.galois import build_field, count_irreducibles
from ffprng.polyring import PolyRing


@pytest.mark.parametrize("p,e,d", [(2, 1, 4), (2, 3, 2), (3, 1, 3),
                                   (5, 1, 2), (3, 2, 2)])
def test_irreducible_enumeration_matches_moebius_count(p, e, d):
    F = build_field(p, e)
    R = PolyRing(F)
    irr = R.irreducibles(d)
    assert len(irr) == count_irreducibles(F.q, d)
    for f in irr[:10]:
        assert R.is_irreducible(f)


def test_is_irreducible_vs_bruteforce():
    F = build_field(2, 2)
    R = PolyRing(F)
    for d in (1, 2, 3):
        monics = R.monics(d)
        for f in monics:
            has_factor = any(
                R.degree(g) >= 1 and not R.mod(f, g)
                for dd in range(1, d)
                for g in R.monics(dd))
            assert R.is_irreducible(f) == (not has_factor or d == 1)


@pytest.mark.parametrize("p,e", [(2, 1), (2, 3), (3, 1), (7, 1), (3, 2)])
def test_factor_roundtrip_random(p, e):
    F = build_field(p, e)
    R = PolyRing(F)
    rng = random.Random(p * 100 + e)
    for _ in range(25):
        # build a product with known factors, including repeated ones
        parts = []
        for _k in range(rng.randrange(1, 4)):
            parts += [R.random_irreducible(rng.randrange(1, 4), rng)] \
                * rng.randrange(1, 4)
        f = reduce(R.mul, parts)
        lead = F.random_element(rng, nonzero=True)
        f = R.scale(lead, f)
        factors = R.factor(f)
        rebuilt = R.poly([lead])
        for g, m in factors:
            assert R.is_irreducible(g)
            for _ in range(m):
                rebuilt = R.mul(rebuilt, g)
        assert rebuilt == f
        assert sum(m * R.degree(g) for g, m in factors) == R.degree(f)


def test_factor_pth_power_multiplicities():
    F = build_field(2, 1)
    R = PolyRing(F)
    x = R.x
    x1 = R.add(x, R.poly([F.one]))
    f = reduce(R.mul, [x, x, x1, x1, x1])  # x^2 (x+1)^3
    assert sorted((R.degree(g), m) for g, m in R.factor(f)) == [(1, 2),
                                                                (1, 3)]


def test_roots_and_shift():
    F = build_field(3, 2)
    R = PolyRing(F)
    rng = random.Random(3)
    for _ in range(10):
        f = R.poly([F.random_element(rng) for _ in range(4)])
        if R.degree(f) < 1:
            continue
        roots = R.roots(f)
        assert roots == [a for a in F.elements()
                         if R.eval_(f, a) == F.zero]
        a = F.random_element(rng)
        g = R.shift(f, a)  # g(x) = f(x + a)
        for b in list(F.elements())[:5]:
            assert R.eval_(g, b) == R.eval_(f, F.add(b, a))


def test_encode_decode_roundtrip():
    F = build_field(2, 3)
    R = PolyRing(F)
    for code in range(200):
        assert R.encode(R.decode(code)) == code
