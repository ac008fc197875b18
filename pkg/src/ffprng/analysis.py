"""Figures of merit for p-ary sequences.

Linear complexity (Berlekamp-Massey) and its profile, d-perfectness,
periodic correlation, r-pattern counts, m-th order nonlinear complexity via
linear feasibility, and direct additive-character sums over the rational
places of a function field.
"""

from __future__ import annotations

import cmath
from itertools import combinations

import numpy as np

from .galois import ParameterError
from .ratfield import RationalFunctionField


class CorrelationValue:
    """Exact count table behind one correlation value C(tau)."""

    __slots__ = ("shift", "counts", "value", "magnitude")

    def __init__(self, shift, counts):
        self.shift = shift
        self.counts = counts
        p = len(counts)
        omega = cmath.exp(2j * cmath.pi / p)
        self.value = sum(c * omega ** a for a, c in enumerate(counts))
        self.magnitude = abs(self.value)


class PatternQuery:
    """Values to match at strictly increasing positions within a period."""

    __slots__ = ("values", "positions")

    def __init__(self, values, positions):
        if len(values) != len(positions):
            raise ParameterError("values and positions must share a length")
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise ParameterError("positions must be strictly increasing")
        self.values = tuple(values)
        self.positions = tuple(positions)


def _bm_steps(s, p):
    """Berlekamp-Massey over F_p, yielding L after each consumed digit."""
    n = len(s)
    c = [1] + [0] * n  # current connection polynomial
    b = [1] + [0] * n  # copy from before the last length change
    L, m = 0, 1
    bdisc = 1
    for i in range(n):
        disc = s[i]
        for j in range(1, L + 1):
            disc = (disc + c[j] * s[i - j]) % p
        if disc == 0:
            m += 1
        else:
            coef = (disc * pow(bdisc, -1, p)) % p
            if 2 * L <= i:
                t = c[:]
                for j in range(0, n + 1 - m):
                    c[j + m] = (c[j + m] - coef * b[j]) % p
                L = i + 1 - L
                b = t
                bdisc = disc
                m = 1
            else:
                for j in range(0, n + 1 - m):
                    c[j + m] = (c[j + m] - coef * b[j]) % p
                m += 1
        yield L


def linear_complexity(s, p):
    """Length of the shortest linear recurrence over F_p generating s."""
    L = 0
    for L in _bm_steps(list(s), p):
        pass
    return L


def lc_profile(s, p):
    """LC of every prefix s[:1], s[:2], ..., s[:n]."""
    return list(_bm_steps(list(s), p))


def d_perfect(s, p, d):
    """|LC_n(s) - n| <= d for every prefix length n (as printed)."""
    if d < 1:
        raise ParameterError("d must be >= 1")
    return all(abs(L - (i + 1)) <= d for i, L in enumerate(lc_profile(s, p)))


def periodic_correlation(s1, s2, shift, p):
    """C(tau) = sum_i omega^(s1[i+tau] - s2[i]) over one period."""
    if len(s1) != len(s2):
        raise ParameterError("sequences must share a period")
    T = len(s1)
    counts = [0] * p
    for i in range(T):
        counts[(s1[(i + shift) % T] - s2[i]) % p] += 1
    return CorrelationValue(shift, tuple(counts))


def correlation_spectrum(s1, s2, p, shifts=None):
    """CorrelationValue at every requested shift (default: all)."""
    if shifts is None:
        shifts = range(len(s1))
    return [periodic_correlation(s1, s2, t, p) for t in shifts]


def pattern_count(s, query):
    """Number of window starts i0 with s[i0 + t_j] = z_j for all j."""
    n = len(s)
    if any(t < 0 or t >= n for t in query.positions):
        raise ParameterError("positions must lie in [0, n)")
    count = 0
    for i0 in range(n):
        if all(s[(i0 + t) % n] == v
               for v, t in zip(query.values, query.positions)):
            count += 1
    return count


def _monomials_of_weight(L, m, p):
    """Exponent tuples over L variables, total degree <= m, entries < p."""
    result = [tuple([0] * L)]

    def rec(start, remaining, current):
        for idx in range(start, L):
            for e in range(1, min(remaining, p - 1) + 1):
                mono = list(current)
                mono[idx] = e
                result.append(tuple(mono))
                rec(idx + 1, remaining - e, mono)

    rec(0, m, [0] * L)
    return result


def _feasible_mod_p(A, b, p):
    """Whether A x = b has a solution over F_p (dense elimination)."""
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    rows, cols = A.shape
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if aug[i, c]:
                piv = i
                break
        if piv is None:
            continue
        aug[[r, piv]] = aug[[piv, r]]
        aug[r] = (aug[r] * pow(int(aug[r, c]), -1, p)) % p
        mask = aug[:, c].copy()
        mask[r] = 0
        aug = (aug - np.outer(mask, aug[r])) % p
        r += 1
        if r == rows:
            break
    # inconsistent iff some residual row is (0 ... 0 | nonzero)
    residual = aug[r:]
    return not np.any((residual[:, :-1].sum(axis=1) == 0)
                      & (residual[:, -1] != 0))


def nonlinear_complexity(s, p, m, monomial_cap=5000):
    """Least window length L admitting a degree-<=m recurrence over F_p."""
    if m < 1:
        raise ParameterError("m must be >= 1")
    s = list(s)
    N = len(s)
    if all(x == 0 for x in s):
        return 0
    for L in range(1, N):
        monos = _monomials_of_weight(L, m, p)
        if len(monos) > monomial_cap:
            raise ParameterError(
                f"monomial count {len(monos)} exceeds cap {monomial_cap}")
        A = []
        b = []
        for i in range(N - L):
            window = s[i:i + L]
            A.append([_eval_mono(window, mono, p) for mono in monos])
            b.append(s[i + L])
        if _feasible_mod_p(A, b, p):
            return L
    return N - 1


def _eval_mono(window, mono, p):
    out = 1
    for x, e in zip(window, mono):
        if e:
            out = (out * pow(x, e, p)) % p
    return out


def exp_sum(domain, z):
    """(value, counts): sum of omega^Tr(z(P)) over rational places off poles.

    `domain` is a RationalFunctionField or an EllipticCurve; z a function
    on it.  Counts are the exact tally of each trace residue.
    """
    if isinstance(domain, RationalFunctionField):
        F = domain.field
        counts = [0] * F.p
        for P in domain.rational_places():
            try:
                val = domain.evaluate_at_place(z, P)
            except ZeroDivisionError:
                continue
            counts[F.trace(val)] += 1
    else:
        F = domain.field
        counts = [0] * F.p
        for P in domain.points():
            try:
                val = domain.evaluate(z, P)
            except ZeroDivisionError:
                continue
            counts[F.trace(val)] += 1
    omega = cmath.exp(2j * cmath.pi / F.p)
    value = sum(c * omega ** a for a, c in enumerate(counts))
    return value, tuple(counts)
