"""Evaluable bound formulas and family verification reports.

Every theorem bound is a pure function of numeric inputs.  Formulas whose
printed algebra looks inconsistent with the results they accompany are
still computed verbatim but marked suspect and never asserted.
"""

from __future__ import annotations

import json
import math
import random
from fractions import Fraction

from .galois import ParameterError
from .analysis import (PatternQuery, linear_complexity, nonlinear_complexity,
                       pattern_count, periodic_correlation)
from .seqgen import least_period

TOLERANCE = 1e-6


class BoundInputs:
    """Numeric inputs shared by the bound formulas."""

    __slots__ = ("q", "p", "h", "g", "n", "d", "m_star", "r", "m", "t")

    def __init__(self, q, p, g, n=None, d=None, m_star=None, r=None, m=None,
                 t=None):
        self.q = q
        self.p = p
        h = 0
        qq = q
        while qq > 1:
            qq //= p
            h += 1
        if p ** h != q:
            raise ParameterError(f"q = {q} is not a power of p = {p}")
        self.h = h
        self.g = g
        self.n = n
        self.d = d
        self.m_star = m_star
        self.r = r
        self.m = m
        self.t = t


def weil_bound(q, g, pole_data):
    """(2g - 2 + sum (m*_u + 1) deg u) * sqrt(q) over the pole support."""
    if not pole_data:
        raise ParameterError("pole data must be nonempty")
    s = sum((mu + 1) * du for mu, du in pole_data)
    return (2 * g - 2 + s) * math.sqrt(q)


def weil_bound_simple_pole(q, deg_pole):
    """Remark specialization: unique pole Q with v_Q(f) = -1."""
    return 2 * deg_pole * math.sqrt(q)


def period_guarantee(q, g, d, m_star):
    """Threshold: the period is exactly n whenever n exceeds this."""
    return (2 * g - 2 + 2 * (m_star + 1) * d) * math.sqrt(q)


def lc_bound_prime(n, d, m_star):
    """LC lower bound for q = p."""
    return (n - m_star * d) / (m_star * d + 1)


def lc_bound_general(q, g, n, d, m_star):
    """LC lower bound for general q."""
    rq = math.sqrt(q)
    return (n - (2 * g - 2) * rq) / ((m_star + 1) * d * rq) - 1


def lc_bound_rational(q, d):
    """Genus-0 family specialization (m* = 1, n = q - 1)."""
    rq = math.sqrt(q)
    return (q - 1 - 2 * (d - 1) * rq) / (2 * d * rq)


def lc_bound_elliptic(q, t, d, m_star):
    """Genus-1 family specialization (n = q + 1 + t)."""
    rq = math.sqrt(q)
    return (q + 1 + t - (m_star + 1) * d * rq) / ((m_star + 1) * d * rq)


def correlation_bound(q, g, tau_case, d1, m1, d2=None, m2=None):
    """Case-split correlation bound.

    tau_case: "shifted" (0 < tau < n), "zero-distinct-poles",
    "zero-same-pole" (tau = 0, Q1 = Q2, z1 != z2).  The tau = 0, z1 = z2
    case is excluded by the theorem; callers must not request it.
    """
    rq = math.sqrt(q)
    if tau_case in ("shifted", "zero-distinct-poles"):
        if d2 is None or m2 is None:
            raise ParameterError("two-pole cases need both pole parameters")
        return (2 * g - 2 + (m1 + 1) * d1 + (m2 + 1) * d2) * rq
    if tau_case == "zero-same-pole":
        return (2 * g - 2 + (m1 + 1) * d1) * rq
    raise ParameterError(f"unknown correlation case {tau_case!r}")


def correlation_bound_rational(q, d):
    """Genus-0 family specialization: 2(2d - 1) sqrt(q)."""
    return 2 * (2 * d - 1) * math.sqrt(q)


def correlation_bound_elliptic(q, d1, m1, d2, m2):
    """Genus-1 family specialization: sum (m*_k + 1) d_k sqrt(q)."""
    return ((m1 + 1) * d1 + (m2 + 1) * d2) * math.sqrt(q)


def pattern_bound(q, g, p, d, m_star, r):
    """Deviation bound for r-pattern counts, as printed."""
    rq = math.sqrt(q)
    return (2 * g - 2) * rq + d * r * rq * (m_star + 1) * (1 - 1 / p)


def nlc_bound(n, p, h, d, m_star, m):
    """NL_m lower bound; negative values are vacuous."""
    ph = p ** (h - 1)
    return (n - ph * m_star * d) / (1 + m * ph * m_star * d)


# -- formulas computed as printed but flagged as suspect --------------------------

def suspect_lc_corollary(q, g, n, d, m_star):
    """Printed |2L - n| bound; algebra inconsistent with the theorem."""
    rq = math.sqrt(q)
    num = 2 * n - (2 * (2 * g - 2) + (n + 2) * (m_star + 1) * d) * rq
    return num / ((m_star + 1) * d * rq)


def suspect_perfect_rational(q, d, t_len):
    """Printed prefix bound behind the genus-0 perfectness claim."""
    rq = math.sqrt(q)
    return (t_len - (-2 + (t_len + 2) * d) * rq) / (d * rq)


def suspect_perfect_elliptic(q, d, s_len):
    """Printed prefix bound behind the genus-1 perfectness claim."""
    rq = math.sqrt(q)
    return (s_len - (s_len + 2) * d * rq) / (d * rq)


# -- exact arithmetic in Q(sqrt(q)) -----------------------------------------------

class QSqrt:
    """a + b*sqrt(q) with exact rational a, b."""

    __slots__ = ("a", "b", "q")

    def __init__(self, a, b, q):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.q = q

    def __add__(self, other):
        assert self.q == other.q
        return QSqrt(self.a + other.a, self.b + other.b, self.q)

    def __sub__(self, other):
        assert self.q == other.q
        return QSqrt(self.a - other.a, self.b - other.b, self.q)

    def __eq__(self, other):
        return (isinstance(other, QSqrt) and self.q == other.q
                and self.a == other.a and self.b == other.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.q)

    def sign(self):
        """Exact sign (sqrt(q) may be rational only when a*b = 0)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return (self.b > 0) - (self.b < 0)
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 * q
        cmp = self.a * self.a - self.b * self.b * self.q
        if cmp == 0:
            return 0
        dominant = self.a if cmp > 0 else self.b
        return 1 if dominant > 0 else -1

    def __repr__(self):
        return f"({self.a}) + ({self.b})*sqrt({self.q})"


def comparison_remarks(q, d, t=None):
    """The binary-field remark comparisons, in exact Q(sqrt(q)) arithmetic.

    Returns the four bound pairs and their differences: L1/L1' and C1/C1'
    for the genus-0 family, and (when t is given) L2/L2' and C2/C2' for the
    genus-1 family.
    """
    # L1 = (q-1-2(d-1)sqrt(q)) / (2d sqrt(q)) = (q-1)/(2dq) sqrt(q) - (d-1)/d
    def over_sqrt(c_const, c_sqrt):
        # (c_const + c_sqrt*sqrt(q)) / (2 d sqrt(q))
        return QSqrt(Fraction(c_sqrt, 2 * d),
                     Fraction(c_const, 2 * d * q), q)

    out = {}
    L1 = over_sqrt(q - 1, -2 * (d - 1))
    L1p = over_sqrt(q - 3, -2 * (d - 1))
    C1 = QSqrt(0, 2 * (2 * d - 1), q)
    C1p = QSqrt(6, 2 * (2 * d - 1), q)
    out["L1"] = L1
    out["L1_prime"] = L1p
    out["L1_diff"] = L1 - L1p
    out["C1"] = C1
    out["C1_prime"] = C1p
    out["C1_diff"] = C1 - C1p
    if t is not None:
        L2 = over_sqrt(q + 1 + t, -2 * d)
        L2p = over_sqrt(q + 1 + 2 * t, -2 * (d + 1))
        C2 = QSqrt(0, 4 * d, q)
        C2p = QSqrt(abs(t), 2 * (2 * d + 1), q)
        out["L2"] = L2
        out["L2_prime"] = L2p
        out["L2_diff"] = L2 - L2p
        out["C2"] = C2
        out["C2_prime"] = C2p
        out["C2_diff"] = C2 - C2p
    return out


# -- verification reports ------------------------------------------------------------

class CheckResult:
    __slots__ = ("check_id", "measured", "bound", "passed", "flags")

    def __init__(self, check_id, measured, bound, passed, flags=()):
        self.check_id = check_id
        self.measured = measured
        self.bound = bound
        self.passed = passed
        self.flags = tuple(flags)

    def to_dict(self):
        return {
            "id": self.check_id,
            "measured": self.measured,
            "bound": self.bound,
            "pass": self.passed,
            "flags": list(self.flags),
        }


class VerificationReport:
    def __init__(self, params, checks):
        self.params = params
        self.checks = checks

    def all_passed(self):
        return all(c.passed for c in self.checks if "suspect" not in c.flags)

    def aggregates(self):
        slacks = [c.bound - c.measured for c in self.checks
                  if "lower-bound" not in c.flags
                  and isinstance(c.bound, (int, float))
                  and isinstance(c.measured, (int, float))]
        return {
            "checks": len(self.checks),
            "passed": sum(1 for c in self.checks if c.passed),
            "min_slack": min(slacks) if slacks else None,
        }

    def to_json(self):
        doc = {
            "schema": "ffprng-report/1",
            "params": self.params,
            "per_check": [c.to_dict() for c in self.checks],
            "aggregates": self.aggregates(),
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def verify_family(records, n_pairs=50, pattern_r=(1, 2), patterns_per_seq=10,
                  pattern_seqs=20, nl_m=None, nl_seqs=0, seed=0):
    """Measured figures of every sequence against the applicable bounds.

    Records must carry full provenance (unique pole, reduced order).  The
    correlation case tau = 0 with z1 = z2 is excluded by the theorem and
    skipped.  Bounds with nonpositive right-hand side pass vacuously and
    are flagged.
    """
    if not records:
        raise ParameterError("empty family")
    rng = random.Random(seed)
    checks = []
    first = records[0]
    p, q, n, g = first.p, first.q, first.n, first.genus
    prime_field = (q == p)

    for idx, rec in enumerate(records):
        if rec.pole_degree is None or rec.reduced_pole_order is None:
            raise ParameterError("record is missing pole provenance")
        d, ms = rec.pole_degree, rec.reduced_pole_order
        thresh = period_guarantee(q, g, d, ms)
        per = least_period(rec.digits)
        if n > thresh:
            checks.append(CheckResult(
                f"period[{idx}]", per, n, per == n, ("exact",)))
        else:
            checks.append(CheckResult(
                f"period[{idx}]", per, n, n % per == 0,
                ("divides-only", "guarantee-not-applicable")))
        lc = linear_complexity(rec.digits, p)
        if prime_field:
            lb = lc_bound_prime(n, d, ms)
        elif g == 0:
            lb = lc_bound_general(q, g, n, d, ms)
        else:
            lb = lc_bound_elliptic(q, rec.trace_t, d, ms)
        flags = ["lower-bound"]
        if lb <= 0:
            flags.append("vacuous")
        checks.append(CheckResult(
            f"lc[{idx}]", lc, lb, lc >= lb - TOLERANCE, flags))

    # pairwise correlation over all shifts, case split per the theorem
    n_rec = len(records)
    for k in range(n_pairs):
        i = rng.randrange(n_rec)
        j = rng.randrange(n_rec)
        r1, r2 = records[i], records[j]
        same_pole = (r1.orbit_index == r2.orbit_index)
        same_z = same_pole and (r1.z_repr == r2.z_repr)
        worst = None
        for tau in range(n):
            if tau == 0:
                if same_z:
                    continue  # excluded by the theorem
                case = "zero-same-pole" if same_pole else "zero-distinct-poles"
            else:
                case = "shifted"
            bound = correlation_bound(
                q, g, case, r1.pole_degree, r1.reduced_pole_order,
                r2.pole_degree, r2.reduced_pole_order)
            cv = periodic_correlation(r1.digits, r2.digits, tau, p)
            slack = bound - cv.magnitude
            if worst is None or slack < worst[0]:
                worst = (slack, cv.magnitude, bound, tau)
        if worst is not None:
            slack, mag, bound, tau = worst
            checks.append(CheckResult(
                f"correlation[{k}:{i},{j}]", mag, bound,
                mag <= bound + TOLERANCE, (f"worst-shift={tau}",)))

    # r-pattern deviations
    for idx, rec in enumerate(records[:pattern_seqs]):
        d, ms = rec.pole_degree, rec.reduced_pole_order
        for r in pattern_r:
            bound = pattern_bound(q, g, p, d, ms, r)
            worst = None
            for _ in range(patterns_per_seq):
                positions = tuple(sorted(rng.sample(range(n), r)))
                values = tuple(rng.randrange(p) for _ in range(r))
                count = pattern_count(rec.digits,
                                      PatternQuery(values, positions))
                dev = abs(count - n / p ** r)
                if worst is None or dev > worst:
                    worst = dev
            flags = []
            if bound <= 0:
                flags.append("vacuous")
            checks.append(CheckResult(
                f"pattern[{idx}:r={r}]", worst, bound,
                worst <= bound + TOLERANCE, flags))

    # nonlinear complexity
    if nl_m is not None and nl_seqs > 0:
        h = 0
        qq = q
        while qq > 1:
            qq //= p
            h += 1
        for idx, rec in enumerate(records[:nl_seqs]):
            d, ms = rec.pole_degree, rec.reduced_pole_order
            bound = nlc_bound(n, p, h, d, ms, nl_m)
            nl = nonlinear_complexity(rec.digits, p, nl_m)
            flags = ["lower-bound"]
            if bound <= 0:
                flags.append("vacuous")
            checks.append(CheckResult(
                f"nlc[{idx}:m={nl_m}]", nl, bound,
                nl >= bound - TOLERANCE, flags))

    params = {
        "p": p, "q": q, "n": n, "genus": g,
        "construction": first.construction,
        "sequences": n_rec, "pairs": n_pairs, "seed": seed,
    }
    return VerificationReport(params, checks)
