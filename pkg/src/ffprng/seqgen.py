"""Trace-sequence construction over orbits of rational places.

Two instantiations: the multiplicative orbit of F_q(x) under x -> eps*x
(evaluation at eps^j, period q - 1) and the translation orbit of a cyclic
elliptic curve (evaluation at [j]P starting at O, period N = q + 1 + t).

Indexing note: for the rational construction the digits are
s_j = Tr(z(eps^j)); reading the orbit as places zero-of(eps^j x - 1)
instead reverses the index, which changes no measured quantity.
"""

from __future__ import annotations

import random
from math import gcd

from .galois import ParameterError, divisors
from .ratfield import Divisor, RationalFunctionField


class PoleOnOrbitError(ParameterError):
    """The function has a pole at one of the orbit's evaluation points."""


class Orbit:
    """Ordered rational places P_0..P_{n-1} swept by one automorphism."""

    __slots__ = ("construction", "n", "domain", "eval_points")

    def __init__(self, construction, n, domain, eval_points):
        self.construction = construction
        self.n = n
        self.domain = domain
        self.eval_points = eval_points


class SequenceRecord:
    """Digits plus the provenance needed by the bound formulas."""

    __slots__ = ("digits", "p", "q", "n", "genus", "construction",
                 "pole_degree", "pole_order", "reduced_pole_order",
                 "orbit_index", "z_repr", "trace_t")

    def __init__(self, digits, p, q, n, genus, construction, pole_degree,
                 pole_order, reduced_pole_order, orbit_index, z_repr,
                 trace_t):
        self.digits = digits
        self.p = p
        self.q = q
        self.n = n
        self.genus = genus
        self.construction = construction
        self.pole_degree = pole_degree
        self.pole_order = pole_order
        self.reduced_pole_order = reduced_pole_order
        self.orbit_index = orbit_index
        self.z_repr = z_repr
        self.trace_t = trace_t

    def provenance(self):
        return {
            "construction": self.construction,
            "p": self.p, "q": self.q, "n": self.n, "genus": self.genus,
            "pole_degree": self.pole_degree,
            "pole_order": self.pole_order,
            "reduced_pole_order": self.reduced_pole_order,
            "orbit_index": self.orbit_index,
            "z": self.z_repr,
            "trace_t": self.trace_t,
        }


def make_rational_orbit(funcfield):
    """Evaluation points eps^0, eps^1, ..., eps^(q-2)."""
    F = funcfield.field
    n = F.q - 1
    points = []
    cur = F.one
    for _ in range(n):
        points.append(cur)
        cur = F.mul(cur, funcfield.epsilon)
    assert cur == F.one and len(set(points)) == n
    return Orbit("rational", n, funcfield, points)


def make_elliptic_orbit(curve):
    """Points O, P, [2]P, ..., [N-1]P for the curve's generator P."""
    P = curve.generator()
    N = curve.group_order()
    points = [None]
    cur = P
    for _ in range(N - 1):
        points.append(cur)
        cur = curve.add(cur, P)
    assert cur is None and len(set(points)) == N
    return Orbit("elliptic", N, curve, points)


def generate_sequence(z, orbit, orbit_index=None):
    """s_j = Tr(z(P_j)) over one period of the orbit."""
    if orbit.construction == "rational":
        funcfield = orbit.domain
        F = funcfield.field
        if not z.num:
            raise ParameterError("z must be nonzero")
        digits = []
        for a in orbit.eval_points:
            try:
                digits.append(F.trace(funcfield.evaluate(z, a)))
            except ZeroDivisionError:
                raise PoleOnOrbitError(
                    "z has a pole at an orbit point") from None
        poles = funcfield.pole_divisor(z)
        z_repr = (f"({funcfield.ring.to_string(z.num)})"
                  f"/({funcfield.ring.to_string(z.den)})")
        genus, trace_t = 0, None
    else:
        curve = orbit.domain
        F = curve.field
        if z.is_zero():
            raise ParameterError("z must be nonzero")
        digits = []
        for P in orbit.eval_points:
            try:
                digits.append(F.trace(curve.evaluate(z, P)))
            except ZeroDivisionError:
                raise PoleOnOrbitError(
                    "z has a pole at an orbit point") from None
        poles = curve.pole_divisor(z)
        R = curve.ring
        z_repr = (f"({R.to_string(z.u)}+({R.to_string(z.v)})*y)"
                  f"/({R.to_string(z.w)})")
        # the point count is written N = q + 1 + t, so t = -frobenius_trace
        genus, trace_t = 1, curve.group_order() - curve.field.q - 1
    if len(poles) == 1:
        [(Q, order)] = poles.items()
        pole_degree = Q.degree
        m_star = order if gcd(order, F.p) == 1 else _reduced_order(
            orbit, z, Q)
    else:
        pole_degree = None
        order = None
        m_star = None
    return SequenceRecord(
        digits=tuple(digits), p=F.p, q=F.q, n=orbit.n, genus=genus,
        construction=orbit.construction, pole_degree=pole_degree,
        pole_order=order, reduced_pole_order=m_star,
        orbit_index=orbit_index, z_repr=z_repr, trace_t=trace_t)


def _reduced_order(orbit, z, Q):
    if orbit.construction == "rational":
        return orbit.domain.reduced_pole_order(z, Q)
    # elliptic reduced order: fast path only; the families filter to
    # gcd(pole order, p) = 1 so this is not reached by construction
    raise ParameterError(
        "reduced pole order with p | order is not supported on curves")


def rational_family(funcfield, d, mode="exhaustive", count=None, seed=0):
    """Sequences s_z for z = g/f_Q, g nonconstant with deg g < d.

    Exhaustive mode enumerates every orbit representative Q and all
    q^d - q admissible numerators; sample mode draws (Q, g) pairs from a
    seeded generator, sampling Q directly from random irreducibles when
    the place inventory exceeds the size cap.
    """
    F = funcfield.field
    q = F.q
    if d < 2:
        raise ParameterError("the construction requires d >= 2")
    if gcd(d, q - 1) != 1:
        raise ParameterError(
            f"gcd(d, q-1) = gcd({d}, {q - 1}) != 1")
    orbit = make_rational_orbit(funcfield)
    R = funcfield.ring
    out = []
    if mode == "exhaustive":
        reps = [o[0] for o in funcfield.orbit_decomposition(d)]
        for i, Q in enumerate(reps):
            for code in range(q ** d):
                g = R.decode(code)
                if len(g) <= 1:
                    continue  # constants produce z in F_q
                z = funcfield.function(g, Q.poly)
                out.append(generate_sequence(z, orbit, orbit_index=i))
        return out
    if mode != "sample":
        raise ParameterError(f"unknown mode {mode!r}")
    if count is None:
        raise ParameterError("sample mode requires a count")
    rng = random.Random(seed)
    within_cap = q ** d <= funcfield.size_cap
    reps = None
    if within_cap:
        reps = [o[0] for o in funcfield.orbit_decomposition(d)]
    for _ in range(count):
        if reps is not None:
            i = rng.randrange(len(reps))
            Q = reps[i]
            idx = i
        else:
            f = R.random_irreducible(d, rng)
            Q = _canonical_rep(funcfield, f)
            idx = Q._code
        while True:
            g = R.decode(rng.randrange(q ** d))
            if len(g) > 1:
                break
        z = funcfield.function(g, Q.poly)
        out.append(generate_sequence(z, orbit, orbit_index=idx))
    return out


def _canonical_rep(funcfield, f):
    """Lexicographically least member of the phi-orbit of the place of f."""
    P = funcfield._place(f)
    best = P
    cur = funcfield.phi_apply(1, P)
    while cur != P:
        if cur.sort_key < best.sort_key:
            best = cur
        cur = funcfield.phi_apply(1, cur)
    return best


def elliptic_family(curve, d, k=1, mode="exhaustive", count=None, seed=0):
    """Sequences s_z for z in L(k*Q_i) with a unique pole of order
    coprime to p, over the translation-orbit representatives Q_i."""
    F = curve.field
    N = curve.group_order()
    if d < 2:
        raise ParameterError("the construction requires d >= 2")
    if gcd(d, N) != 1:
        raise ParameterError(f"gcd(d, N) = gcd({d}, {N}) != 1")
    orbit = make_elliptic_orbit(curve)
    reps = [o[0] for o in curve.translation_orbits(d)]
    bases = {}

    def basis_for(i):
        if i not in bases:
            bases[i] = curve.riemann_roch_basis(Divisor({reps[i]: k}))
        return bases[i]

    def admissible(i, coeffs):
        basis = basis_for(i)
        z = curve.constant(F.zero)
        for c, b in zip(coeffs, basis):
            if c != F.zero:
                z = curve.fn_add(z, curve.fn_scale(c, b))
        if z.is_zero():
            return None
        v = curve.valuation(z, reps[i])
        if v >= 0:  # constant or no pole: z in F_q or degenerate support
            return None
        if gcd(-v, F.p) != 1:
            return None
        return z

    out = []
    if mode == "exhaustive":
        for i in range(len(reps)):
            dim = len(basis_for(i))
            for code in range(F.q ** dim):
                coeffs = []
                c = code
                for _ in range(dim):
                    coeffs.append(F.element(c % F.q))
                    c //= F.q
                z = admissible(i, coeffs)
                if z is not None:
                    out.append(generate_sequence(z, orbit, orbit_index=i))
        return out
    if mode != "sample":
        raise ParameterError(f"unknown mode {mode!r}")
    if count is None:
        raise ParameterError("sample mode requires a count")
    rng = random.Random(seed)
    while len(out) < count:
        i = rng.randrange(len(reps))
        dim = len(basis_for(i))
        coeffs = [F.random_element(rng) for _ in range(dim)]
        z = admissible(i, coeffs)
        if z is not None:
            out.append(generate_sequence(z, orbit, orbit_index=i))
    return out


def least_period(digits):
    """Smallest k >= 1 with digits[(j + k) % n] == digits[j] for all j."""
    n = len(digits)
    for k in divisors(n):
        if all(digits[(j + k) % n] == digits[j] for j in range(n)):
            return k
    return n
