import random

import pytest

from ffprng.galois import (FiniteField, ParameterError, SizeCapError,
                           build_field, count_irreducibles, divisors,
                           extend_field, is_prime, mobius, prime_factors)


def test_primality_helpers():
    primes = [2, 3, 5, 7, 11, 13, 101, 127]
    for n in range(2, 200):
        assert is_prime(n) == all(n % d for d in range(2, n)) or n in (2, 3)
    assert prime_factors(360) == [2, 3, 5]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0,
                                                 0, 1]
    for p in primes:
        assert is_prime(p)


@pytest.mark.parametrize("p,e", [(2, 1), (2, 4), (3, 2), (5, 1), (7, 2)])
def test_field_axioms(p, e):
    F = build_field(p, e)
    rng = random.Random(11)
    elems = [F.random_element(rng) for _ in range(20)]
    for a in elems:
        assert F.add(a, F.zero) == a
        assert F.mul(a, F.one) == a
        assert F.add(a, F.neg(a)) == F.zero
        if a != F.zero:
            assert F.mul(a, F.inv(a)) == F.one
    for a in elems[:8]:
        for b in elems[:8]:
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems[:4]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b),
                                                      F.mul(a, c))


def test_frobenius_and_trace():
    F = build_field(3, 3)
    for a in F.elements():
        fr = F.frobenius(a)
        assert fr == F.pow_(a, 3)
        assert F.pth_root(fr) == a
    traces = [F.trace(a) for a in F.elements()]
    # absolute trace is onto F_p, balanced: each value hit q/p times
    for v in range(3):
        assert traces.count(v) == 9
    rng = random.Random(5)
    for _ in range(20):
        a, b = F.random_element(rng), F.random_element(rng)
        assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 3


def test_multiplicative_order():
    F = build_field(2, 4)
    orders = [F.multiplicative_order(a) for a in F.elements()
              if a != F.zero]
    assert max(orders) == 15
    assert sorted(set(orders)) == [d for d in divisors(15)]


def test_count_irreducibles_known():
    assert count_irreducibles(2, 1) == 2
    assert count_irreducibles(2, 2) == 1
    assert count_irreducibles(2, 3) == 2
    assert count_irreducibles(2, 4) == 3
    assert count_irreducibles(3, 2) == 3
    assert count_irreducibles(11, 3) == (11 ** 3 - 11) // 3


def test_extension_tower():
    F = build_field(2, 3)
    ext = extend_field(F, 2)
    K = ext.ext
    assert K.q == 64
    rng = random.Random(7)
    for _ in range(15):
        a, b = F.random_element(rng), F.random_element(rng)
        assert ext.embed(F.mul(a, b)) == K.mul(ext.embed(a), ext.embed(b))
        assert ext.embed(F.add(a, b)) == K.add(ext.embed(a), ext.embed(b))
    # relative Frobenius x -> x^q fixes exactly the base field image
    base_img = {ext.embed(a) for a in F.elements()}
    fixed = {a for a in K.elements() if ext.relative_frobenius(a) == a}
    assert fixed == base_img
    # coords invert embed on the base component
    for a in list(F.elements())[:8]:
        coords = ext.coords(ext.embed(a))
        assert coords[0] == a
        assert all(c == F.zero for c in coords[1:])


def test_size_cap():
    F = build_field(2, 3)
    with pytest.raises(SizeCapError):
        extend_field(F, 10)
    with pytest.raises(ParameterError):
        build_field(4, 1)
