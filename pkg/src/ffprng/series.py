"""Truncated power series over a FiniteField, and principal-part reduction.

A series is a plain list of field elements [c0, c1, ...] in a fixed local
parameter; all operations take an explicit precision (number of kept terms).
Principal parts of a function at a pole are dicts {order: coefficient} with
order >= 1 meaning the coefficient of t^-order.
"""

from __future__ import annotations

from math import gcd


def series_mul(F, a, b, prec):
    out = [F.zero] * prec
    for i, ai in enumerate(a[:prec]):
        if ai == F.zero:
            continue
        for j, bj in enumerate(b[: prec - i]):
            out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return out


def series_inv(F, a, prec):
    """Inverse of a unit series by Newton iteration."""
    if not a or a[0] == F.zero:
        raise ZeroDivisionError("series has no inverse: zero constant term")
    out = [F.inv(a[0])]
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        t = series_mul(F, a[:k], out, k)
        # out <- out * (2 - a*out)
        corr = [F.neg(c) for c in t]
        corr[0] = F.add(corr[0], F.smul(2, F.one))
        out = series_mul(F, out, corr, k)
    return out[:prec]


def reduce_principal_part(F, principal):
    """Reduced pole order of an Artin-Schreier principal part.

    Substituting z -> z + (w^p - w) replaces a term c/t^m with p | m by
    c^(1/p)/t^(m/p) without touching rational-point sums.  Greedy
    application yields the smallest achievable pole order; the result is 0
    when the whole principal part can be removed.
    """
    p = F.p
    pp = {m: c for m, c in principal.items() if c != F.zero}
    while pp:
        m = max(pp)
        if m % p:
            return m
        c = pp.pop(m)
        lower = m // p
        merged = F.add(pp.get(lower, F.zero), F.pth_root(c))
        if merged != F.zero:
            pp[lower] = merged
        elif lower in pp:
            del pp[lower]
    return 0


def reduced_order_if_coprime(valuation, p):
    """Fast path: a pole of order m with gcd(m, p) = 1 is already reduced."""
    m = -valuation
    if m > 0 and gcd(m, p) == 1:
        return m
    return None
