"""Univariate polynomial arithmetic over a FiniteField.

Polynomials are tuples of field elements, little-endian, with no trailing
zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from .galois import ParameterError, divisors, prime_factors


class PolyRing:
    """F_q[x] for a fixed coefficient field."""

    def __init__(self, field):
        self.field = field
        self.zero = ()
        self.one = (field.one,)
        self.x = (field.zero, field.one)
        self._irreducible_cache = {}

    # -- construction and encoding -------------------------------------------

    def poly(self, coeffs):
        """Polynomial from a list of elements or integer element codes."""
        F = self.field
        out = [c if isinstance(c, tuple) else F.element(c) for c in coeffs]
        while out and out[-1] == F.zero:
            out.pop()
        return tuple(out)

    def encode(self, f):
        """Integer code of f: sum of element codes in base q."""
        code = 0
        for c in reversed(f):
            code = code * self.field.q + self.field.index(c)
        return code

    def decode(self, code, degree=None):
        q = self.field.q
        coeffs = []
        while code:
            coeffs.append(self.field.element(code % q))
            code //= q
        if degree is not None:
            while len(coeffs) < degree + 1:
                coeffs.append(self.field.zero)
        return self.poly(coeffs)

    def monics(self, d):
        """All monic polynomials of degree d, in code order."""
        q = self.field.q
        for low in range(q ** d):
            yield self.decode(low + q ** d)

    def degree(self, f):
        return len(f) - 1

    def to_string(self, f):
        """Readable form with integer-coded coefficients."""
        if not f:
            return "0"
        parts = []
        for i in range(len(f) - 1, -1, -1):
            c = self.field.index(f[i])
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if c == 1 else f"{c}*{xs}")
        return "+".join(parts)

    # -- ring operations ------------------------------------------------------

    def add(self, f, g):
        F = self.field
        n = max(len(f), len(g))
        f = f + (F.zero,) * (n - len(f))
        g = g + (F.zero,) * (n - len(g))
        return self.poly([F.add(a, b) for a, b in zip(f, g)])

    def sub(self, f, g):
        return self.add(f, self.neg(g))

    def neg(self, f):
        F = self.field
        return tuple(F.neg(c) for c in f)

    def mul(self, f, g):
        F = self.field
        if not f or not g:
            return ()
        out = [F.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a != F.zero:
                for j, b in enumerate(g):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self.poly(out)

    def scale(self, c, f):
        F = self.field
        if c == F.zero:
            return ()
        return tuple(F.mul(c, a) for a in f)

    def divmod_(self, f, g):
        F = self.field
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(f)
        dg = len(g) - 1
        inv_lead = F.inv(g[-1])
        quot = [F.zero] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            c = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - dg
            quot[shift] = c
            if c != F.zero:
                for j in range(dg + 1):
                    rem[shift + j] = F.sub(rem[shift + j], F.mul(c, g[j]))
            rem.pop()
            while rem and rem[-1] == F.zero:
                rem.pop()
        return self.poly(quot), self.poly(rem)

    def mod(self, f, g):
        return self.divmod_(f, g)[1]

    def gcd(self, f, g):
        while g:
            f, g = g, self.mod(f, g)
        return self.monic(f) if f else ()

    def monic(self, f):
        F = self.field
        if not f:
            return ()
        if f[-1] == F.one:
            return f
        return self.scale(F.inv(f[-1]), f)

    def pow_mod(self, f, k, mod):
        result = self.one
        f = self.mod(f, mod)
        while k:
            if k & 1:
                result = self.mod(self.mul(result, f), mod)
            f = self.mod(self.mul(f, f), mod)
            k >>= 1
        return result

    def eval_(self, f, a):
        F = self.field
        acc = F.zero
        for c in reversed(f):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def derivative(self, f):
        F = self.field
        return self.poly([F.smul(i, f[i]) for i in range(1, len(f))])

    def shift(self, f, a):
        """f(x + a), by Horner's rule on the composition."""
        F = self.field
        out = ()
        for c in reversed(f):
            out = self.add(self.mul(out, (a, F.one)), (c,))
        return out

    def reverse(self, f, degree=None):
        """Coefficient reversal x^deg * f(1/x)."""
        if degree is None:
            degree = len(f) - 1
        F = self.field
        coeffs = list(f) + [F.zero] * (degree + 1 - len(f))
        return self.poly(coeffs[::-1])

    # -- irreducibility and factorization --------------------------------------

    def is_irreducible(self, f):
        d = len(f) - 1
        if d < 1:
            return False
        q = self.field.q
        f = self.monic(f)
        for ell in prime_factors(d):
            h = self.pow_mod(self.x, q ** (d // ell), f)
            if len(self.gcd(self.sub(h, self.x), f)) != 1:
                return False
        h = self.pow_mod(self.x, q ** d, f)
        return not self.mod(self.sub(h, self.x), f)

    def irreducibles(self, d):
        """All monic irreducibles of degree d, in code order (sieved)."""
        if d in self._irreducible_cache:
            return self._irreducible_cache[d]
        q = self.field.q
        if d == 1:
            out = list(self.monics(1))
        else:
            reducible = set()
            for b in range(1, d // 2 + 1):
                for g in self.irreducibles(b):
                    for h in self.monics(d - b):
                        reducible.add(self.encode(self.mul(g, h)))
            base = q ** d
            out = [self.decode(base + low) for low in range(base)
                   if base + low not in reducible]
        self._irreducible_cache[d] = out
        return out

    def random_irreducible(self, d, rng):
        """Uniformly sampled monic irreducible of degree d (rejection)."""
        q = self.field.q
        while True:
            f = self.decode(q ** d + rng.randrange(q ** d))
            if self.is_irreducible(f):
                return f

    def _squarefree_parts(self, f):
        """List of (squarefree poly, multiplicity) with product f (monic)."""
        F = self.field
        p = F.p
        out = []
        df = self.derivative(f)
        if not df:
            # f = g(x^p); take p-th roots of coefficients
            g = self.poly([F.pth_root(f[i]) for i in range(0, len(f), p)])
            return [(s, m * p) for s, m in self._squarefree_parts(g)]
        c = self.gcd(f, df)
        w = self.divmod_(f, c)[0]
        mult = 1
        while len(w) > 1:
            y = self.gcd(w, c)
            fac = self.divmod_(w, y)[0]
            if len(fac) > 1:
                out.append((fac, mult))
            w = y
            c = self.divmod_(c, y)[0]
            mult += 1
        if len(c) > 1:
            # c is a polynomial in x^p; its derivative is zero, so the
            # recursive call takes the p-th root branch and scales by p.
            out.extend(self._squarefree_parts(c))
        return out

    def _distinct_degree(self, f):
        """Split squarefree monic f into [(product, factor degree)]."""
        out = []
        h = self.x
        b = 0
        rest = f
        while len(rest) - 1 >= 2 * (b + 1):
            b += 1
            h = self.pow_mod(h, self.field.q, rest)
            g = self.gcd(self.sub(h, self.x), rest)
            if len(g) > 1:
                out.append((g, b))
                rest = self.divmod_(rest, g)[0]
                h = self.mod(h, rest)
        if len(rest) > 1:
            out.append((rest, len(rest) - 1))
        return out

    def _equal_degree_split(self, f, b, rng):
        """One nontrivial factor of monic squarefree f, all factors degree b."""
        q = self.field.q
        d = len(f) - 1
        while True:
            r = self.decode(rng.randrange(1, q ** d))
            if len(r) < 1:
                continue
            g = self.gcd(r, f)
            if 1 < len(g) < len(f):
                return g
            if self.field.p == 2:
                # trace map sum r^(2^i) over the degree-b subfield tower
                k = self.field.e * b
                t = r
                acc = r
                for _ in range(k - 1):
                    t = self.mod(self.mul(t, t), f)
                    acc = self.add(acc, t)
                g = self.gcd(acc, f)
            else:
                h = self.pow_mod(r, (q ** b - 1) // 2, f)
                g = self.gcd(self.sub(h, self.one), f)
            if 1 < len(g) < len(f):
                return g

    def factor(self, f):
        """Full factorization of nonzero f: sorted list of (monic, mult)."""
        import random

        if not f:
            raise ParameterError("cannot factor the zero polynomial")
        rng = random.Random(0x5eed)
        result = {}
        f = self.monic(f)
        if len(f) == 1:
            return []
        for sqfree, mult in self._squarefree_parts(f):
            for prod, b in self._distinct_degree(sqfree):
                stack = [prod]
                while stack:
                    g = stack.pop()
                    if len(g) - 1 == b:
                        result[g] = result.get(g, 0) + mult
                    else:
                        h = self._equal_degree_split(g, b, rng)
                        stack.append(h)
                        stack.append(self.divmod_(g, h)[0])
        return sorted(result.items(), key=lambda kv: (len(kv[0]), self.encode(kv[0])))

    def roots(self, f):
        """Roots of f in the coefficient field, ascending by code."""
        q = self.field.q
        g = self.gcd(f, self.sub(self.pow_mod(self.x, q, f), self.x))
        out = [self.field.neg(fac[0]) for fac, _ in self.factor(g)
               if len(fac) == 2]
        return sorted(out, key=self.field.index)
