import random

from ffprng.galois import build_field
from ffprng.series import (reduce_principal_part, reduced_order_if_coprime,
                           series_inv, series_mul)


def test_series_mul_matches_convolution():
    F = build_field(3, 2)
    rng = random.Random(1)
    prec = 8
    a = [F.random_element(rng) for _ in range(prec)]
    b = [F.random_element(rng) for _ in range(prec)]
    c = series_mul(F, a, b, prec)
    for k in range(prec):
        acc = F.zero
        for i in range(k + 1):
            acc = F.add(acc, F.mul(a[i], b[k - i]))
        assert c[k] == acc


def test_series_inv_identity():
    for p, e in ((2, 3), (5, 1), (3, 2)):
        F = build_field(p, e)
        rng = random.Random(p)
        prec = 10
        a = [F.random_element(rng) for _ in range(prec)]
        a[0] = F.random_element(rng, nonzero=True)
        inv = series_inv(F, a, prec)
        prod = series_mul(F, a, inv, prec)
        assert prod[0] == F.one
        assert all(c == F.zero for c in prod[1:])


def test_reduce_principal_part_power_of_p():
    F = build_field(2, 3)
    # a lone pole of order 4 = 2^2 reduces all the way to order 1
    assert reduce_principal_part(F, {4: F.one}) == 1
    # order 2 with an order-1 term: both collapse onto order 1
    c = F.element((0, 1, 0))
    merged = reduce_principal_part(F, {2: F.mul(c, c), 1: F.neg(c)})
    # c^(1/2) of c^2 is c, which cancels the -c term exactly
    assert merged == 0


def test_reduce_principal_part_coprime_order_is_fixed():
    F = build_field(3, 1)
    assert reduce_principal_part(F, {5: F.one, 2: F.one}) == 5
    assert reduced_order_if_coprime(-5, 3) == 5
    assert reduced_order_if_coprime(-6, 3) is None
