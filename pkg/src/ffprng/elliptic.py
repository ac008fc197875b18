"""Cyclic elliptic curves over F_q.

Long Weierstrass model y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6 so
characteristics 2 and 3 are handled uniformly.  Provides deterministic
curve search by target point count, the chord-tangent group law, degree-d
places as Frobenius orbits, translation orbits, Riemann-Roch bases, and
valuations via local power-series expansions.

Points are None (the point at infinity O) or (x, y) coordinate pairs.
"""

from __future__ import annotations

from math import gcd, isqrt

from .galois import (DEFAULT_SIZE_CAP, ParameterError, SizeCapError,
                     divisors, extend_field, mobius, prime_factors)
from .polyring import PolyRing
from .ratfield import Divisor
from .series import series_inv, series_mul


class _Ops:
    """Curve arithmetic over one coefficient field (base or extension)."""

    def __init__(self, K, coeffs):
        self.K = K
        self.a1, self.a2, self.a3, self.a4, self.a6 = coeffs
        self._solver = None

    def rhs(self, x):
        K = self.K
        x2 = K.mul(x, x)
        out = K.add(K.mul(x2, x), K.mul(self.a2, x2))
        return K.add(out, K.add(K.mul(self.a4, x), self.a6))

    def hcoef(self, x):
        return self.K.add(self.K.mul(self.a1, x), self.a3)

    def on_curve(self, P):
        if P is None:
            return True
        K = self.K
        x, y = P
        lhs = K.add(K.mul(y, y), K.mul(self.hcoef(x), y))
        return lhs == self.rhs(x)

    def neg(self, P):
        if P is None:
            return None
        K = self.K
        x, y = P
        return (x, K.neg(K.add(y, self.hcoef(x))))

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        K = self.K
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if K.add(y1, y2) == K.neg(self.hcoef(x1)):
                return None
            # tangent slope
            num = K.add(K.smul(3, K.mul(x1, x1)),
                        K.add(K.smul(2, K.mul(self.a2, x1)),
                              K.sub(self.a4, K.mul(self.a1, y1))))
            den = K.add(K.smul(2, y1), self.hcoef(x1))
        else:
            num = K.sub(y2, y1)
            den = K.sub(x2, x1)
        lam = K.div(num, den)
        nu = K.div(K.sub(K.mul(y1, x2), K.mul(y2, x1)), K.sub(x2, x1)) \
            if x1 != x2 else K.sub(y1, K.mul(lam, x1))
        x3 = K.sub(K.add(K.mul(lam, lam), K.sub(K.mul(self.a1, lam), self.a2)),
                   K.add(x1, x2))
        y3 = K.neg(K.add(K.mul(K.add(lam, self.a1), x3), K.add(nu, self.a3)))
        return (x3, y3)

    def smul(self, k, P):
        if k < 0:
            return self.smul(-k, self.neg(P))
        out = None
        while k:
            if k & 1:
                out = self.add(out, P)
            P = self.add(P, P)
            k >>= 1
        return out

    def _build_solver(self):
        """Tables for solving y^2 + h*y = c over K, per characteristic."""
        K = self.K
        if K.p == 2:
            table = {}
            for w in K.elements():
                table.setdefault(K.add(K.mul(w, w), w), w)
            self._solver = ("artin-schreier", table)
        else:
            table = {}
            for y in K.elements():
                table.setdefault(K.mul(y, y), y)
            self._solver = ("sqrt", table)

    def y_solutions(self, x):
        """All y with (x, y) on the curve, deterministically ordered."""
        if self._solver is None:
            self._build_solver()
        K = self.K
        kind, table = self._solver
        h = self.hcoef(x)
        c = self.rhs(x)
        if kind == "sqrt":
            # (y + h/2)^2 = c + h^2/4
            half = K.inv(K.scalar(2))
            h2 = K.mul(h, half)
            target = K.add(c, K.mul(h2, h2))
            if target == K.zero:
                return [K.neg(h2)]
            s = table.get(target)
            if s is None:
                return []
            ys = [K.sub(s, h2), K.sub(K.neg(s), h2)]
        elif h == K.zero:
            # y^2 = c has the unique root c^(1/2)
            y = c
            for _ in range(K.e - 1):
                y = K.mul(y, y)
            return [y]
        else:
            # y = h*w with w^2 + w = c/h^2
            target = K.div(c, K.mul(h, h))
            w = table.get(target)
            if w is None:
                return []
            ys = [K.mul(h, w), K.mul(h, K.add(w, K.one))]
        ys.sort(key=K.index)
        return ys

    def y_solutions_one(self, x):
        """y_solutions without the field-wide table (large extensions)."""
        K = self.K
        if K.q <= 4096:
            return self.y_solutions(x)
        h = self.hcoef(x)
        c = self.rhs(x)
        if K.p == 2:
            if h == K.zero:
                y = c
                for _ in range(K.e - 1):
                    y = K.mul(y, y)
                return [y]
            target = K.div(c, K.mul(h, h))
            w = _solve_artin_schreier(K, target)
            if w is None:
                return []
            ys = [K.mul(h, w), K.mul(h, K.add(w, K.one))]
        else:
            half = K.inv(K.scalar(2))
            h2 = K.mul(h, half)
            target = K.add(c, K.mul(h2, h2))
            if target == K.zero:
                return [K.neg(h2)]
            s = _sqrt(K, target)
            if s is None:
                return []
            ys = [K.sub(s, h2), K.sub(K.neg(s), h2)]
        ys.sort(key=K.index)
        return ys


class ECPlace:
    """A place of the elliptic function field: one Frobenius orbit."""

    __slots__ = ("degree", "points", "sort_key")

    def __init__(self, points, key):
        self.degree = len(points)
        self.points = points
        self.sort_key = key

    @property
    def is_origin(self):
        return self.points[0] is None

    def __eq__(self, other):
        return isinstance(other, ECPlace) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"ECPlace(deg={self.degree}, {self.sort_key})"


class ECFunction:
    """(u(x) + v(x)*y) / w(x) with w monic and gcd(u, v, w) = 1."""

    __slots__ = ("u", "v", "w")

    def __init__(self, u, v, w):
        self.u = u
        self.v = v
        self.w = w

    def __eq__(self, other):
        return (isinstance(other, ECFunction) and self.u == other.u
                and self.v == other.v and self.w == other.w)

    def __hash__(self):
        return hash((self.u, self.v, self.w))

    def is_zero(self):
        return not self.u and not self.v

    def __repr__(self):
        return f"ECFunction({self.u!r}, {self.v!r}, {self.w!r})"


class _Laurent:
    """t^val * (c0 + c1*t + ...), coefficients valid below exponent bound."""

    __slots__ = ("val", "coeffs", "bound")

    def __init__(self, val, coeffs, bound):
        self.val = val
        self.coeffs = coeffs
        self.bound = bound


class EllipticCurve:
    genus = 1

    def __init__(self, field, a1, a2, a3, a4, a6, size_cap=DEFAULT_SIZE_CAP):
        self.field = field
        self.size_cap = size_cap
        self.coeffs = (a1, a2, a3, a4, a6)
        if self.discriminant() == field.zero:
            raise ParameterError("singular Weierstrass equation")
        self.ring = PolyRing(field)
        self._ops = _Ops(field, self.coeffs)
        self._ops_cache = {}
        self._points = None
        self._generator = None

    def discriminant(self):
        F = self.field
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = F.add(F.mul(a1, a1), F.smul(4, a2))
        b4 = F.add(F.smul(2, a4), F.mul(a1, a3))
        b6 = F.add(F.mul(a3, a3), F.smul(4, a6))
        b8 = F.add(F.add(F.mul(F.mul(a1, a1), a6), F.smul(4, F.mul(a2, a6))),
                   F.add(F.sub(F.mul(a2, F.mul(a3, a3)),
                               F.mul(a1, F.mul(a3, a4))),
                         F.neg(F.mul(a4, a4))))
        return F.add(
            F.add(F.neg(F.mul(F.mul(b2, b2), b8)),
                  F.neg(F.smul(8, F.mul(b4, F.mul(b4, b4))))),
            F.add(F.neg(F.smul(27, F.mul(b6, b6))),
                  F.smul(9, F.mul(b2, F.mul(b4, b6)))))

    def __repr__(self):
        a = [self.field.index(c) for c in self.coeffs]
        return (f"EllipticCurve(q={self.field.q}, a1={a[0]}, a2={a[1]}, "
                f"a3={a[2]}, a4={a[3]}, a6={a[4]})")

    # -- group arithmetic over the base field and extensions ----------------------

    def ops(self, extension=None):
        """Arithmetic helper over F_q (default) or an extension F_{q^d}."""
        if extension is None:
            return self._ops
        key = extension.d
        if key not in self._ops_cache:
            coeffs = tuple(extension.embed(c) for c in self.coeffs)
            self._ops_cache[key] = _Ops(extension.ext, coeffs)
        return self._ops_cache[key]

    def add(self, P, Q):
        return self._ops.add(P, Q)

    def neg(self, P):
        return self._ops.neg(P)

    def smul(self, k, P):
        return self._ops.smul(k, P)

    def on_curve(self, P):
        return self._ops.on_curve(P)

    def points(self, extension=None):
        """All points over F_q (cached) or an extension, O first."""
        ops = self.ops(extension)
        if extension is None and self._points is not None:
            return self._points
        K = ops.K
        pts = [None]
        for x in K.elements():
            pts.extend((x, y) for y in ops.y_solutions(x))
        if extension is None:
            self._points = pts
        return pts

    def group_order(self):
        N = len(self.points())
        q = self.field.q
        assert abs(N - (q + 1)) <= isqrt(4 * q)
        return N

    def frobenius_trace(self):
        return self.field.q + 1 - self.group_order()

    def point_order(self, P):
        N = self.group_order()
        order = N
        for ell in prime_factors(N):
            while order % ell == 0 and self.smul(order // ell, P) is None:
                order //= ell
        return order

    def generator(self):
        """A point of order N; raises if the group is not cyclic."""
        if self._generator is not None:
            return self._generator
        N = self.group_order()
        primes = prime_factors(N)
        for P in self.points():
            if P is None:
                continue
            if all(self.smul(N // ell, P) is not None for ell in primes):
                self._generator = P
                return P
        raise ParameterError("group is not cyclic: no point of full order")

    # -- places --------------------------------------------------------------------

    def count_places_zeta(self, d):
        """B_d from the zeta-function trace recurrence."""
        q = self.field.q
        a = self.frobenius_trace()
        s = [2, a]
        for b in range(2, d + 1):
            s.append(a * s[b - 1] - q * s[b - 2])
        total = 0
        for b in divisors(d):
            total += mobius(d // b) * (q ** b + 1 - s[b])
        assert total % d == 0
        return total // d

    def _point_key(self, P, K):
        return (-1, -1) if P is None else (K.index(P[0]), K.index(P[1]))

    def _make_place(self, orbit_set, K):
        pts = sorted(orbit_set, key=lambda P: self._point_key(P, K))
        start = pts[0]
        return ECPlace(tuple(pts), self._point_key(start, K))

    def places_of_degree(self, d):
        """Degree-d places as size-d Frobenius orbits; checked against zeta."""
        F = self.field
        if d == 1:
            places = [ECPlace((P,), self._point_key(P, F))
                      for P in self.points()]
            places.sort(key=lambda pl: pl.sort_key)
            return places
        if F.q ** d > self.size_cap:
            raise SizeCapError(f"q^d = {F.q}^{d} exceeds size cap")
        ext = extend_field(F, d, self.size_cap)
        K = ext.ext
        frob = ext.relative_frobenius
        seen = set()
        places = []
        for P in self.points(ext):
            if P is None or P in seen:
                continue
            orbit = [P]
            seen.add(P)
            cur = (frob(P[0]), frob(P[1]))
            while cur != P:
                orbit.append(cur)
                seen.add(cur)
                cur = (frob(cur[0]), frob(cur[1]))
            if len(orbit) == d:
                places.append(self._make_place(orbit, K))
        places.sort(key=lambda pl: pl.sort_key)
        assert len(places) == self.count_places_zeta(d)
        return places

    def translate_place(self, place, P_emb, ext):
        """sigma_P applied to a place: add P to every point of the orbit."""
        ops = self.ops(ext)
        K = ext.ext
        return self._make_place([ops.add(Q, P_emb) for Q in place.points], K)

    def translation_orbits(self, d):
        """Orbits of degree-d places under translation by the generator."""
        N = self.group_order()
        if gcd(d, N) != 1:
            raise ParameterError(
                f"gcd(d, N) = gcd({d}, {N}) != 1: orbit sizes not guaranteed")
        ext = extend_field(self.field, d, self.size_cap)
        P = self.generator()
        P_emb = (ext.embed(P[0]), ext.embed(P[1]))
        remaining = {pl.sort_key: pl for pl in self.places_of_degree(d)}
        orbits = []
        while remaining:
            start = remaining[min(remaining)]
            orbit = [start]
            del remaining[start.sort_key]
            cur = self.translate_place(start, P_emb, ext)
            while cur != start:
                orbit.append(cur)
                del remaining[cur.sort_key]
                cur = self.translate_place(cur, P_emb, ext)
            if len(orbit) != N:
                raise ParameterError(f"orbit of size {len(orbit)} != N = {N}")
            orbits.append(orbit)
        return orbits

    def origin_place(self):
        return ECPlace((None,), (-1, -1))

    # -- functions -------------------------------------------------------------------

    def function(self, u, v=None, w=None):
        """Canonical ECFunction from coefficient lists or polynomials."""
        R = self.ring

        def as_poly(a):
            if a is None:
                return R.zero
            if isinstance(a, tuple) and (not a or isinstance(a[0], tuple)):
                return a
            return R.poly(a)

        u = as_poly(u)
        v = as_poly(v)
        w = as_poly(w) if w is not None else R.one
        if not w:
            raise ZeroDivisionError("zero denominator")
        g = R.gcd(R.gcd(u, v), w)
        if len(g) > 1:
            u = R.divmod_(u, g)[0]
            v = R.divmod_(v, g)[0]
            w = R.divmod_(w, g)[0]
        lead = w[-1]
        if lead != self.field.one:
            c = self.field.inv(lead)
            u, v, w = R.scale(c, u), R.scale(c, v), R.scale(c, w)
        return ECFunction(u, v, w)

    def fn_add(self, f, g):
        R = self.ring
        return self.function(
            R.add(R.mul(f.u, g.w), R.mul(g.u, f.w)),
            R.add(R.mul(f.v, g.w), R.mul(g.v, f.w)),
            R.mul(f.w, g.w))

    def fn_scale(self, c, f):
        R = self.ring
        return ECFunction(R.scale(c, f.u), R.scale(c, f.v), f.w)

    def constant(self, c):
        return self.function([c])

    # -- local expansions ---------------------------------------------------------------

    def _xy_series(self, ops, point, prec):
        """Power-series pair (x(t), y(t)) as _Laurent at the given point.

        Uniformizer: x - x0 at a non-ramified affine point, y - y0 at a
        ramified one, t = x/y at O.
        """
        K = ops.K
        if point is None:
            # w = 1/y satisfies w = t^3 + a2 t^2 w + (a4 t - a1 t - ...) ...
            a1, a2, a3, a4, a6 = (ops.a1, ops.a2, ops.a3, ops.a4, ops.a6)
            T = prec + 4
            w = [K.zero] * T
            for _ in range(T):
                w2 = series_mul(K, w, w, T)
                w3 = series_mul(K, w2, w, T)
                new = [K.zero] * T
                if T > 3:
                    new[3] = K.one
                for i in range(T - 2):
                    new[i + 2] = K.add(new[i + 2], K.mul(a2, w[i]))
                    new[i + 1] = K.add(new[i + 1],
                                       K.neg(K.mul(a1, w[i])))
                for i in range(T - 1):
                    new[i + 1] = K.add(new[i + 1], K.mul(a4, w2[i]))
                    new[i] = K.add(new[i], K.neg(K.mul(a3, w2[i])))
                for i in range(T):
                    new[i] = K.add(new[i], K.mul(a6, w3[i]))
                if new == w:
                    break
                w = new
            # w = t^3 * unit; x = t/w, y = 1/w
            unit = w[3:] + [K.zero] * 3
            inv_unit = series_inv(K, unit, prec)
            x_l = _Laurent(-2, inv_unit[:prec], -2 + prec)
            y_l = _Laurent(-3, inv_unit[:prec], -3 + prec)
            return x_l, y_l
        x0, y0 = point
        tangent = K.add(K.smul(2, y0), ops.hcoef(x0))
        a1, a2, a3, a4, a6 = (ops.a1, ops.a2, ops.a3, ops.a4, ops.a6)
        if tangent != K.zero:
            # t = x - x0; solve the curve equation for y(t) by Newton
            x_ser = [x0, K.one] + [K.zero] * (prec - 2)
            y_ser = [y0] + [K.zero] * (prec - 1)
            h_ser = [K.add(K.mul(a1, c), (a3 if i == 0 else K.zero))
                     for i, c in enumerate(x_ser)]
            rhs = self._rhs_series(ops, x_ser, prec)
            for _ in range(prec.bit_length() + 1):
                y2 = series_mul(K, y_ser, y_ser, prec)
                hy = series_mul(K, h_ser, y_ser, prec)
                fy = [K.sub(K.add(y2[i], hy[i]), rhs[i]) for i in range(prec)]
                dfy = [K.add(K.smul(2, y_ser[i]), h_ser[i])
                       for i in range(prec)]
                corr = series_mul(K, fy, series_inv(K, dfy, prec), prec)
                y_new = [K.sub(y_ser[i], corr[i]) for i in range(prec)]
                if y_new == y_ser:
                    break
                y_ser = y_new
            return (_Laurent(0, x_ser, prec), _Laurent(0, y_ser, prec))
        # ramified: s = y - y0; solve for x(s) by Newton
        y_ser = [y0, K.one] + [K.zero] * (prec - 2)
        x_ser = [x0] + [K.zero] * (prec - 1)
        for _ in range(prec.bit_length() + 1):
            h_ser = [K.add(K.mul(a1, c), (a3 if i == 0 else K.zero))
                     for i, c in enumerate(x_ser)]
            rhs = self._rhs_series(ops, x_ser, prec)
            y2 = series_mul(K, y_ser, y_ser, prec)
            hy = series_mul(K, h_ser, y_ser, prec)
            gx = [K.sub(K.add(y2[i], hy[i]), rhs[i]) for i in range(prec)]
            # d/dx of (a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6)
            x2 = series_mul(K, x_ser, x_ser, prec)
            dgx = [K.sub(K.mul(a1, y_ser[i]),
                         K.add(K.smul(3, x2[i]),
                               K.add(K.smul(2, K.mul(a2, x_ser[i])),
                                     (a4 if i == 0 else K.zero))))
                   for i in range(prec)]
            corr = series_mul(K, gx, series_inv(K, dgx, prec), prec)
            x_new = [K.sub(x_ser[i], corr[i]) for i in range(prec)]
            if x_new == x_ser:
                break
            x_ser = x_new
        return (_Laurent(0, x_ser, prec), _Laurent(0, y_ser, prec))

    def _rhs_series(self, ops, x_ser, prec):
        K = ops.K
        x2 = series_mul(K, x_ser, x_ser, prec)
        x3 = series_mul(K, x2, x_ser, prec)
        return [K.add(K.add(x3[i], K.mul(ops.a2, x2[i])),
                      K.add(K.mul(ops.a4, x_ser[i]),
                            (ops.a6 if i == 0 else K.zero)))
                for i in range(prec)]

    # Laurent helpers -------------------------------------------------------------

    def _laur_add(self, K, a, b):
        val = min(a.val, b.val)
        bound = min(a.bound, b.bound)
        n = bound - val
        out = [K.zero] * n
        for i, c in enumerate(a.coeffs[: bound - a.val]):
            out[a.val - val + i] = K.add(out[a.val - val + i], c)
        for i, c in enumerate(b.coeffs[: bound - b.val]):
            out[b.val - val + i] = K.add(out[b.val - val + i], c)
        return _Laurent(val, out, bound)

    def _laur_mul(self, K, a, b):
        val = a.val + b.val
        bound = min(a.bound + b.val, b.bound + a.val)
        n = max(bound - val, 0)
        return _Laurent(val, series_mul(K, a.coeffs, b.coeffs, n), bound)

    def _laur_scale(self, K, c, a):
        return _Laurent(a.val, [K.mul(c, x) for x in a.coeffs], a.bound)

    def _poly_at_series(self, K, coeffs, x_l):
        """Evaluate a polynomial (embedded coefficients) at a Laurent series."""
        if not coeffs:
            return _Laurent(0, [], 10 ** 9)
        out = _Laurent(0, [coeffs[-1]], 10 ** 9)
        for c in reversed(coeffs[:-1]):
            out = self._laur_mul(K, out, x_l)
            out = self._laur_add(K, out, _Laurent(0, [c], 10 ** 9))
        return out

    def local_expansion(self, z, place, prec):
        """(v, coeffs, K) of z at the place's canonical representative point."""
        if z.is_zero():
            raise ParameterError("the zero function has no local expansion")
        F = self.field
        if place.degree == 1:
            K = F
            embed = lambda c: c
            ops = self._ops
        else:
            ext = extend_field(F, place.degree, self.size_cap)
            K = ext.ext
            embed = ext.embed
            ops = self.ops(ext)
        pt = place.points[0]
        # work precision: enough to clear cancellation up to `prec` terms
        degs = max(len(z.u), len(z.v), len(z.w), 1)
        work = prec + 3 * degs + 8
        x_l, y_l = self._xy_series(ops, pt, work)
        num = self._poly_at_series(K, [embed(c) for c in z.u], x_l)
        if z.v:
            vy = self._laur_mul(
                K, self._poly_at_series(K, [embed(c) for c in z.v], x_l),
                y_l)
            num = self._laur_add(K, num, vy)
        den = self._poly_at_series(K, [embed(c) for c in z.w], x_l)

        def first_nonzero(l):
            for i, c in enumerate(l.coeffs[: l.bound - l.val]):
                if c != K.zero:
                    return i
            return None

        fn = first_nonzero(num)
        fd = first_nonzero(den)
        if fn is None or fd is None:
            raise ParameterError("insufficient series precision")
        v = (num.val + fn) - (den.val + fd)
        n_ser = num.coeffs[fn:fn + prec] + [K.zero] * prec
        d_ser = den.coeffs[fd:fd + prec] + [K.zero] * prec
        coeffs = series_mul(K, n_ser[:prec], series_inv(K, d_ser[:prec], prec),
                            prec)
        return v, coeffs, K

    def valuation(self, z, place):
        if z.is_zero():
            raise ParameterError("the zero function has valuation +inf")
        v, _, _ = self.local_expansion(z, place, 1)
        return v

    def pole_divisor(self, z):
        """Divisor of poles; searches places over the zeros of w and at O."""
        if z.is_zero():
            raise ParameterError("the zero function has no pole divisor")
        coeffs = {}
        for place in self._candidate_places(z):
            v = self.valuation(z, place)
            if v < 0:
                coeffs[place] = -v
        return Divisor(coeffs)

    def _candidate_places(self, z):
        """Places where z might have a pole: over zeros of w, plus O."""
        out = [self.origin_place()]
        for f, _ in (self.ring.factor(z.w) if len(z.w) > 1 else []):
            out.extend(self._places_over_x_poly(f))
        return out

    def _places_over_x_poly(self, f):
        """The places lying over the zero set of an irreducible f(x).

        Whether the points above the roots of f are defined over F_{q^dx}
        (dx = deg f) or only over F_{q^(2 dx)} is Galois-invariant, so a
        single root decides which extension carries the places.
        """
        dx = len(f) - 1
        for d in (dx, 2 * dx):
            if self.field.q ** d > self.size_cap:
                raise SizeCapError(
                    f"q^d = {self.field.q}^{d} exceeds size cap")
            if d == 1:
                K = self.field
                ops = self._ops
                frob = None
                f_K = f
            else:
                ext = extend_field(self.field, d, self.size_cap)
                K = ext.ext
                ops = self.ops(ext)
                frob = ext.relative_frobenius
                RK = PolyRing(K)
                f_K = RK.poly([ext.embed(c) for c in f])
            roots = PolyRing(K).roots(f_K)
            points = []
            for x0 in roots:
                points.extend((x0, y) for y in ops.y_solutions_one(x0))
            if not points:
                continue
            places = []
            seen = set()
            for P in points:
                if P in seen:
                    continue
                orbit = [P]
                seen.add(P)
                if frob is not None:
                    cur = (frob(P[0]), frob(P[1]))
                    while cur != P:
                        orbit.append(cur)
                        seen.add(cur)
                        cur = (frob(cur[0]), frob(cur[1]))
                if len(orbit) != d:
                    raise ParameterError(
                        f"point orbit of size {len(orbit)} != {d} over zeros"
                        " of an irreducible polynomial")
                places.append(self._make_place(orbit, K))
            places.sort(key=lambda pl: pl.sort_key)
            return places
        raise ParameterError("no points found over the zeros of f")

    def evaluate(self, z, point):
        """Value of z at a rational point (series fallback where w vanishes)."""
        F = self.field
        R = self.ring
        if point is not None:
            wv = R.eval_(z.w, point[0])
            if wv != F.zero:
                num = R.eval_(z.u, point[0])
                if z.v:
                    num = F.add(num, F.mul(R.eval_(z.v, point[0]), point[1]))
                return F.div(num, wv)
        place = ECPlace((point,), self._point_key(point, F))
        v, coeffs, _ = self.local_expansion(z, place, 1)
        if v < 0:
            raise ZeroDivisionError("pole at evaluation point")
        return coeffs[0] if v == 0 else F.zero

    # -- Riemann-Roch -------------------------------------------------------------------

    def _monomials(self, M):
        """Exponents (i, j) with j <= 1, 2i + 3j <= M: a basis of L(M*O)."""
        out = []
        for j in (0, 1):
            for i in range((M - 3 * j) // 2 + 1):
                if 2 * i + 3 * j <= M and (i, j) != (0, 0):
                    out.append((i, j))
        return [(0, 0)] + sorted(out, key=lambda ij: (2 * ij[0] + 3 * ij[1],
                                                      ij[1]))

    def riemann_roch_basis(self, G):
        """Basis of L(G) for an effective divisor G with deg G >= 1.

        Functions are built as h/u with u a polynomial in x vanishing on the
        finite support of G and h ranging over L(M*O); vanishing conditions
        at the zeros of u not granted by G cut out L(G).
        """
        if not G.is_effective() or G.degree() < 1:
            raise ParameterError("G must be effective with deg G >= 1")
        F = self.field
        R = self.ring
        k_O = 0
        u = R.one
        finite = []
        for place, k in G.items():
            if place.is_origin:
                k_O = k
                continue
            finite.append((place, k))
            mx = self._x_minpoly(place)
            for _ in range(k):
                u = R.mul(u, mx)
        deg_u = len(u) - 1
        M = 2 * deg_u + k_O
        if M < 1:
            M = 1
        monos = self._monomials(M)
        # vanishing conditions: at every place R over the zeros of u,
        # h must vanish to order v_R(u) - G[R]
        conditions = []
        u_fn = self.function(u)
        for place in self._candidate_places(self.function(R.one, None, u)):
            if place.is_origin:
                continue
            vR = self.valuation(u_fn, place)
            if vR <= 0:
                continue
            need = vR - G.get(place)
            if need > 0:
                conditions.append((place, need))
        rows = self._vanishing_rows(monos, conditions)
        kernel = _kernel_basis(F, rows, len(monos))
        if len(kernel) != G.degree():
            raise ParameterError(
                f"Riemann-Roch solve failed: dim {len(kernel)} != {G.degree()}")
        basis = []
        for vec in kernel:
            hu = R.zero
            hv = R.zero
            for coeff, (i, j) in zip(vec, monos):
                if coeff == F.zero:
                    continue
                mono = R.poly([F.zero] * i + [coeff])
                if j == 0:
                    hu = R.add(hu, mono)
                else:
                    hv = R.add(hv, mono)
            basis.append(self.function(hu, hv, u))
        return basis

    def _x_minpoly(self, place):
        """Minimal polynomial over F_q of the x-coordinates of a place."""
        F = self.field
        d = place.degree
        if d == 1:
            x0 = place.points[0][0]
            return self.ring.poly([F.neg(x0), F.one])
        ext = extend_field(F, d, self.size_cap)
        K = ext.ext
        xs = sorted({P[0] for P in place.points}, key=K.index)
        RK = PolyRing(K)
        prod = RK.one
        for x0 in xs:
            prod = RK.mul(prod, RK.poly([K.neg(x0), K.one]))
        # coefficients are Galois-invariant, hence lie in the base field
        coeffs = []
        for c in prod:
            co = ext.coords(c)
            assert all(ci == F.zero for ci in co[1:])
            coeffs.append(co[0])
        return self.ring.poly(coeffs)

    def _vanishing_rows(self, monos, conditions):
        """F_q-linear rows forcing each monomial combo to vanish as required."""
        F = self.field
        rows = []
        for place, need in conditions:
            d = place.degree
            if d == 1:
                expansions = []
                for (i, j) in monos:
                    z = self._monomial_fn(i, j)
                    v, coeffs, K = self.local_expansion(z, place, need)
                    expansions.append(self._shifted(coeffs, v, need, K))
                for k in range(need):
                    rows.append([exp[k] for exp in expansions])
            else:
                ext = extend_field(F, d, self.size_cap)
                expansions = []
                for (i, j) in monos:
                    z = self._monomial_fn(i, j)
                    v, coeffs, K = self.local_expansion(z, place, need)
                    expansions.append(self._shifted(coeffs, v, need, K))
                for k in range(need):
                    for comp in range(d):
                        rows.append([ext.coords(exp[k])[comp]
                                     for exp in expansions])
        return rows

    def _monomial_fn(self, i, j):
        F = self.field
        mono = self.ring.poly([F.zero] * i + [F.one])
        if j == 0:
            return self.function(mono)
        return self.function(None, mono)

    def _shifted(self, coeffs, v, need, K):
        """Coefficients of t^0..t^(need-1) given expansion starting at t^v."""
        out = [K.zero] * need
        for idx in range(need):
            src = idx - v
            if 0 <= src < len(coeffs):
                out[idx] = coeffs[src]
            elif src < 0:
                raise ParameterError("unexpected pole in vanishing condition")
        return out


def _solve_artin_schreier(K, target):
    """One solution w of w^2 + w = target over F_{2^e}, or None."""
    e = K.e
    cols = []
    for i in range(e):
        b = K.element([0] * i + [1] + [0] * (e - 1 - i))
        cols.append(K.add(K.frobenius(b), b))
    # augmented GF(2) system: sum w_i * cols[i] = target
    rows = [[cols[i][j] for i in range(e)] + [target[j]] for j in range(e)]
    piv = []
    r = 0
    for c in range(e):
        pr = next((i for i in range(r, e) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(e):
            if i != r and rows[i][c]:
                rows[i] = [(a + b) & 1 for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    if any(rows[i][e] for i in range(r, e)):
        return None
    w = [0] * e
    for ri, c in enumerate(piv):
        w[c] = rows[ri][e]
    return K.element(w)


def _sqrt(K, a):
    """A square root of a over an odd-order field, or None (Tonelli-Shanks)."""
    Q = K.q
    if a == K.zero:
        return K.zero
    if K.pow_(a, (Q - 1) // 2) != K.one:
        return None
    if Q % 4 == 3:
        return K.pow_(a, (Q + 1) // 4)
    s, r = Q - 1, 0
    while s % 2 == 0:
        s //= 2
        r += 1
    z = next(x for x in K.elements()
             if x != K.zero and K.pow_(x, (Q - 1) // 2) != K.one)
    c = K.pow_(z, s)
    x = K.pow_(a, (s + 1) // 2)
    t = K.pow_(a, s)
    m = r
    while t != K.one:
        i, tt = 0, t
        while tt != K.one:
            tt = K.mul(tt, tt)
            i += 1
        b = K.pow_(c, 1 << (m - i - 1))
        x = K.mul(x, b)
        c = K.mul(b, b)
        t = K.mul(t, c)
        m = i
    return x


def _kernel_basis(F, rows, ncols):
    """Basis of the right kernel of the matrix over the field F."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != F.zero:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = F.inv(mat[r][c])
        mat[r] = [F.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != F.zero:
                fac = mat[i][c]
                mat[i] = [F.sub(mat[i][k], F.mul(fac, mat[r][k]))
                          for k in range(ncols)]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [F.zero] * ncols
        vec[fc] = F.one
        for ri, pc in enumerate(pivots):
            vec[pc] = F.neg(mat[ri][fc])
        basis.append(vec)
    return basis


def admissible_trace(q, p, n, t):
    """The existence conditions for a cyclic curve with q + 1 + t points."""
    root = isqrt(q)
    if t != 0 and abs(t) <= 2 * root and gcd(t, p) == 1:
        return True
    if t == 0 and (n % 2 == 1 or q % 4 != 3):
        return True
    if n % 2 == 0 and root * root == q and abs(t) == root and p % 3 != 1:
        return True
    if n % 2 == 1 and p in (2, 3) and abs(t) == p ** ((n + 1) // 2):
        return True
    return False


def search_cyclic_curve(field, t, max_candidates=None):
    """First curve (deterministic scan) with N = q + 1 + t and cyclic group.

    Scans y^2 = x^3 + a4*x + a6 for p >= 5 and the full long Weierstrass
    form for p in {2, 3}, in lexicographic coefficient order.
    """
    q = field.q
    if not admissible_trace(q, field.p, field.e, t):
        raise ParameterError(
            f"t = {t} does not satisfy the existence conditions for q = {q}")
    N = q + 1 + t
    zero = field.zero
    if field.p >= 5:
        candidates = ((zero, zero, zero, a4, a6)
                      for a4 in field.elements() for a6 in field.elements())
    else:
        candidates = ((a1, a2, a3, a4, a6)
                      for a1 in field.elements() for a2 in field.elements()
                      for a3 in field.elements() for a4 in field.elements()
                      for a6 in field.elements())
    checked = 0
    for coeffs in candidates:
        if max_candidates is not None and checked >= max_candidates:
            break
        checked += 1
        try:
            curve = EllipticCurve(field, *coeffs)
        except ParameterError:
            continue
        if curve.group_order() != N:
            continue
        try:
            curve.generator()
        except ParameterError:
            continue
        return curve
    raise ParameterError(
        f"no cyclic curve with {N} points found over F_{q} "
        f"after {checked} candidates")
