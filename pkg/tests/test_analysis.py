import cmath
import itertools
import random

from ffprng.galois import build_field
from ffprng.ratfield import RationalFunctionField
from ffprng.analysis import (PatternQuery, correlation_spectrum, d_perfect,
                             exp_sum, lc_profile, linear_complexity,
                             nonlinear_complexity, pattern_count,
                             periodic_correlation)


def _brute_lc(s, p):
    n = len(s)
    if all(d == 0 for d in s):
        return 0
    for L in range(1, n + 1):
        for coeffs in itertools.product(range(p), repeat=L):
            if all((s[i + L] + sum(c * s[i + j] for j, c in
                                   enumerate(coeffs))) % p == 0
                   for i in range(n - L)):
                return L
    return n


def test_linear_complexity_vs_bruteforce_binary():
    for n in range(1, 9):
        for bits in itertools.product((0, 1), repeat=n):
            assert linear_complexity(bits, 2) == _brute_lc(bits, 2)


def test_linear_complexity_vs_bruteforce_ternary():
    rng = random.Random(0)
    for _ in range(60):
        n = rng.randrange(1, 8)
        s = tuple(rng.randrange(3) for _ in range(n))
        assert linear_complexity(s, 3) == _brute_lc(s, 3)


def test_lc_profile_monotone_and_final():
    rng = random.Random(1)
    for _ in range(20):
        s = tuple(rng.randrange(2) for _ in range(24))
        prof = lc_profile(s, 2)
        assert len(prof) == 24
        assert all(a <= b for a, b in zip(prof, prof[1:]))
        assert prof[-1] == linear_complexity(s, 2)


def test_d_perfect():
    # the profile of 1,0,0,...,0 jumps to n at the last digit: not d-perfect
    s = (1,) + (0,) * 9
    assert not d_perfect(s, 2, 2)
    rng = random.Random(3)
    for _ in range(10):
        s2 = tuple(rng.randrange(2) for _ in range(20))
        prof = lc_profile(s2, 2)
        d = max(abs(prof[i] - (i + 1)) for i in range(20))
        assert d_perfect(s2, 2, max(d, 1))
        if d > 1:
            assert not d_perfect(s2, 2, d - 1)


def test_periodic_correlation_vs_naive():
    rng = random.Random(4)
    for p in (2, 3, 5):
        omega = cmath.exp(2j * cmath.pi / p)
        for _ in range(10):
            T = rng.randrange(2, 40)
            s1 = tuple(rng.randrange(p) for _ in range(T))
            s2 = tuple(rng.randrange(p) for _ in range(T))
            tau = rng.randrange(T)
            cv = periodic_correlation(s1, s2, tau, p)
            naive = sum(omega ** (s1[(j + tau) % T] - s2[j])
                        for j in range(T))
            assert abs(cv.value - naive) < 1e-9
            assert sum(cv.counts) == T


def test_correlation_spectrum_shifts():
    s = (0, 1, 1, 0, 1)
    spec = correlation_spectrum(s, s, 2)
    assert len(spec) == 5
    assert abs(spec[0].value - 5) < 1e-12  # autocorrelation at shift 0


def test_pattern_count_partition():
    rng = random.Random(5)
    for p in (2, 3):
        n = 30
        s = tuple(rng.randrange(p) for _ in range(n))
        positions = (0, 3, 7)
        total = 0
        for values in itertools.product(range(p), repeat=3):
            total += pattern_count(s, PatternQuery(values, positions))
        assert total == n  # the patterns partition the index range


def test_pattern_count_known():
    s = (0, 1, 0, 1)
    assert pattern_count(s, PatternQuery((0,), (0,))) == 2
    assert pattern_count(s, PatternQuery((0, 1), (0, 1))) == 2
    assert pattern_count(s, PatternQuery((0, 0), (0, 1))) == 0


def _brute_nl(s, p, m, Lmax):
    # exhaustive search over every degree <= m polynomial recurrence
    n = len(s)
    for L in range(1, Lmax + 1):
        monos = [exps for exps in itertools.product(range(p), repeat=L)
                 if sum(exps) <= m]
        for coeffs in itertools.product(range(p), repeat=len(monos)):
            ok = True
            for i in range(n - L):
                w = s[i:i + L]
                val = 0
                for c, exps in zip(coeffs, monos):
                    term = c
                    for x, e in zip(w, exps):
                        term = term * pow(x, e, p)
                    val += term
                if val % p != s[i + L]:
                    ok = False
                    break
            if ok:
                return L
    return Lmax + 1


def test_nonlinear_complexity_vs_bruteforce():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randrange(3, 11)
        s = tuple(rng.randrange(2) for _ in range(n))
        nl = nonlinear_complexity(s, 2, 2)
        if all(x == 0 for x in s):
            assert nl == 0  # same convention as linear complexity
            continue
        brute = _brute_nl(s, 2, 2, 3)
        if brute <= 3:
            assert nl == brute
        else:
            assert nl > 3


def test_exp_sum_rational():
    F = build_field(2, 3)
    FF = RationalFunctionField(F)
    z = FF.function((F.zero, F.one))  # f = x sums to zero over A
    value, counts = exp_sum(FF, z)
    assert abs(value) < 1e-12
    assert sum(counts) == 8  # 9 rational places minus the pole at infinity
    const = FF.constant(F.one)
    v2, _ = exp_sum(FF, const)
    expected = 9 * cmath.exp(2j * cmath.pi / 2) ** F.trace(F.one)
    assert abs(v2 - expected) < 1e-12
