"""The rational function field F_q(x).

Provides places (monic irreducibles and the place at infinity), the scaling
automorphism x -> eps*x and its orbit structure on places, Riemann-Roch
spaces L(Q), valuations, local expansions, and Artin-Schreier reduced pole
orders.
"""

from __future__ import annotations

from math import gcd

from .galois import (DEFAULT_SIZE_CAP, ParameterError, SizeCapError,
                     count_irreducibles, extend_field)
from .polyring import PolyRing
from .series import reduce_principal_part, series_inv, series_mul


class ZeroFunctionError(ParameterError):
    """Raised where the zero function has no defined valuation or pole."""


class RatPlace:
    """A place of F_q(x): a monic irreducible polynomial, or infinity."""

    __slots__ = ("poly", "degree", "_code", "sort_key")

    def __init__(self, poly, code):
        self.poly = poly
        self.degree = 1 if poly is None else len(poly) - 1
        self._code = code
        self.sort_key = (1, 0) if poly is None else (0, code)

    @property
    def is_infinity(self):
        return self.poly is None

    def __eq__(self, other):
        return isinstance(other, RatPlace) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return "Place(inf)" if self.poly is None else f"Place({self._code})"


class RatFunction:
    """num/den with den monic, gcd(num, den) = 1; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (isinstance(other, RatFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunction({self.num!r}, {self.den!r})"


class Divisor:
    """Finite formal sum of places; zero coefficients are not stored."""

    def __init__(self, coeffs=None):
        self.coeffs = {P: k for P, k in (coeffs or {}).items() if k}

    def degree(self):
        return sum(k * P.degree for P, k in self.coeffs.items())

    def support(self):
        return set(self.coeffs)

    def get(self, P):
        return self.coeffs.get(P, 0)

    def is_effective(self):
        return all(k > 0 for k in self.coeffs.values())

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Divisor({self.coeffs!r})"


class RationalFunctionField:
    """F_q(x) with the automorphism x -> eps*x (eps a fixed generator)."""

    genus = 0

    def __init__(self, field, size_cap=DEFAULT_SIZE_CAP):
        self.field = field
        self.ring = PolyRing(field)
        self.size_cap = size_cap
        self.epsilon = field.primitive
        self.infinity = RatPlace(None, 0)

    # -- functions -------------------------------------------------------------

    def function(self, num, den=None):
        """Canonical rational function from polynomial(s) or coefficients."""
        R = self.ring
        if not isinstance(num, tuple) or (num and not isinstance(num[0], tuple)):
            num = R.poly(num)
        else:
            num = R.poly(list(num))
        if den is None:
            den = R.one
        elif not isinstance(den, tuple) or (den and not isinstance(den[0], tuple)):
            den = R.poly(den)
        else:
            den = R.poly(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = R.gcd(num, den)
        if len(g) > 1:
            num = R.divmod_(num, g)[0]
            den = R.divmod_(den, g)[0]
        lead = den[-1]
        if lead != self.field.one:
            c = self.field.inv(lead)
            num = R.scale(c, num)
            den = R.scale(c, den)
        return RatFunction(num, den)

    def fn_add(self, z1, z2):
        R = self.ring
        num = R.add(R.mul(z1.num, z2.den), R.mul(z2.num, z1.den))
        return self.function(num, R.mul(z1.den, z2.den))

    def fn_mul(self, z1, z2):
        R = self.ring
        return self.function(R.mul(z1.num, z2.num), R.mul(z1.den, z2.den))

    def fn_scale(self, c, z):
        return self.function(self.ring.scale(c, z.num), z.den)

    def constant(self, c):
        return RatFunction(self.ring.poly([c]), self.ring.one)

    def evaluate(self, z, a):
        """Value of z at x = a; a may live in an extension (pre-embedded)."""
        R = self.ring
        d = R.eval_(z.den, a)
        if d == self.field.zero:
            raise ZeroDivisionError("pole at evaluation point")
        return self.field.div(R.eval_(z.num, a), d)

    def evaluate_at_place(self, z, P):
        """Value at a degree-1 place (finite x = a, or infinity)."""
        F = self.field
        if not P.is_infinity:
            return self.evaluate(z, F.neg(P.poly[0]))
        dn, dd = len(z.num) - 1, len(z.den) - 1
        if dn > dd:
            raise ZeroDivisionError("pole at infinity")
        if dn < dd or not z.num:
            return F.zero
        return F.div(z.num[-1], z.den[-1])

    # -- places ------------------------------------------------------------------

    def _place(self, f):
        return RatPlace(f, self.ring.encode(f))

    def places_of_degree(self, d):
        """All finite places of degree d, ordered by coefficient code."""
        if d < 1:
            raise ParameterError("place degree must be >= 1")
        if self.field.q ** d > self.size_cap:
            raise SizeCapError(
                f"q^d = {self.field.q}^{d} exceeds size cap {self.size_cap}")
        return [self._place(f) for f in self.ring.irreducibles(d)]

    def rational_places(self):
        """All q + 1 degree-1 places, infinity last."""
        return self.places_of_degree(1) + [self.infinity]

    def phi_apply(self, k, P):
        """Image of P under the k-th power of x -> eps*x (infinity fixed)."""
        if P.is_infinity:
            return P
        F = self.field
        s = F.pow_(self.epsilon, k % (F.q - 1))
        powk = F.one
        coeffs = []
        for c in P.poly:
            coeffs.append(F.mul(c, powk))
            powk = F.mul(powk, s)
        return self._place(self.ring.monic(self.ring.poly(coeffs)))

    def orbit_decomposition(self, d):
        """Orbits of degree-d places under phi, each of size exactly q - 1."""
        q = self.field.q
        if d < 2:
            raise ParameterError("orbit decomposition requires d >= 2")
        if gcd(d, q - 1) != 1:
            raise ParameterError(
                f"gcd(d, q-1) = gcd({d}, {q - 1}) != 1: orbit sizes not guaranteed")
        remaining = {P._code: P for P in self.places_of_degree(d)}
        orbits = []
        while remaining:
            start = remaining[min(remaining)]
            orbit = [start]
            del remaining[start._code]
            cur = self.phi_apply(1, start)
            while cur != start:
                orbit.append(cur)
                del remaining[cur._code]
                cur = self.phi_apply(1, cur)
            if len(orbit) != q - 1:
                raise ParameterError(
                    f"orbit of size {len(orbit)} != q-1 = {q - 1}")
            orbits.append(orbit)
        expected = count_irreducibles(q, d) // (q - 1)
        assert len(orbits) == expected
        return orbits

    def riemann_roch_basis(self, Q):
        """Basis {1, 1/f, x/f, ..., x^(d-1)/f} of L(Q) for finite Q."""
        if Q.is_infinity:
            raise ParameterError("L(Q) basis is defined for finite places only")
        R = self.ring
        basis = [self.constant(self.field.one)]
        for i in range(Q.degree):
            mono = R.poly([self.field.zero] * i + [self.field.one])
            basis.append(RatFunction(mono, Q.poly))
        return basis

    # -- valuations ---------------------------------------------------------------

    def valuation(self, z, P):
        if not z.num:
            raise ZeroFunctionError("the zero function has valuation +inf")
        if P.is_infinity:
            return (len(z.den) - 1) - (len(z.num) - 1)

        def mult(g):
            m = 0
            while True:
                quo, rem = self.ring.divmod_(g, P.poly)
                if rem:
                    return m
                m += 1
                g = quo

        return mult(z.num) - mult(z.den)

    def pole_divisor(self, z):
        if not z.num:
            raise ZeroFunctionError("the zero function has no pole divisor")
        coeffs = {}
        for f, m in self.ring.factor(z.den):
            coeffs[self._place(f)] = m
        v_inf = self.valuation(z, self.infinity)
        if v_inf < 0:
            coeffs[self.infinity] = -v_inf
        return Divisor(coeffs)

    # -- local expansions and reduced pole orders -----------------------------------

    def _extension_root(self, P):
        """(K, embed, theta): a root of P's polynomial in F_{q^deg P}."""
        F = self.field
        if P.degree == 1:
            return F, (lambda x: x), F.neg(P.poly[0])
        ext = extend_field(F, P.degree, self.size_cap)
        K = ext.ext
        RK = PolyRing(K)
        f_K = RK.poly([ext.embed(c) for c in P.poly])
        roots = RK.roots(f_K)
        return K, ext.embed, roots[0]

    def local_expansion(self, z, P, prec):
        """(v, coeffs, K): z = sum coeffs[i] * t^(v+i) + O(t^(v+prec)).

        t is x - theta at a finite place (theta a root of P's polynomial,
        series over K = F_{q^deg P}) and 1/x at infinity (series over F_q).
        """
        if not z.num:
            raise ZeroFunctionError("the zero function has no local expansion")
        F = self.field
        shift = 0
        if P.is_infinity:
            K = F
            num = list(reversed(z.num))
            den = list(reversed(z.den))
            # num(x) = u^(-deg num) * rev_num(u) in u = 1/x, likewise den
            shift = (len(z.den) - 1) - (len(z.num) - 1)
        else:
            K, embed, theta = self._extension_root(P)
            RK = PolyRing(K)
            num = list(RK.shift(RK.poly([embed(c) for c in z.num]), theta))
            den = list(RK.shift(RK.poly([embed(c) for c in z.den]), theta))
        vn = next(i for i, c in enumerate(num) if c != K.zero)
        vd = next(i for i, c in enumerate(den) if c != K.zero)
        n_ser = num[vn:] + [K.zero] * max(0, prec - (len(num) - vn))
        d_ser = den[vd:] + [K.zero] * max(0, prec - (len(den) - vd))
        coeffs = series_mul(K, n_ser, series_inv(K, d_ser, prec), prec)
        return vn - vd + shift, coeffs, K

    def principal_part(self, z, P):
        """{order: coefficient in F_{q^deg P}} of the pole of z at P."""
        v = self.valuation(z, P)
        if v >= 0:
            return {}
        _, coeffs, K = self.local_expansion(z, P, -v)
        return {-(v + i): c for i, c in enumerate(coeffs[: -v]) if c != K.zero}

    def reduced_pole_order(self, z, Q):
        """m*_Q(z): least pole order at Q over z + {w^p - w}."""
        v = self.valuation(z, Q)
        if v >= 0:
            return 0
        m = -v
        if gcd(m, self.field.p) == 1:
            return m
        _, coeffs, K = self.local_expansion(z, Q, m)
        principal = {m - i: c for i, c in enumerate(coeffs[:m]) if c != K.zero}
        return reduce_principal_part(K, principal)

    def is_nondegenerate(self, z):
        """(flag, witness): whether z is not of the form a + w^p - w.

        The witness is a place where the reduced pole order is positive
        (None when degenerate).  Valid at genus 0: partial fractions split z
        into per-pole parts that reduce independently.
        """
        if not z.num:
            return False, None
        poles = self.pole_divisor(z)
        for P, k in poles.items():
            if gcd(k, self.field.p) == 1:
                return True, P
        for P, _ in poles.items():
            if self.reduced_pole_order(z, P) > 0:
                return True, P
        return False, None
