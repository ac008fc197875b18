"""Exact arithmetic in F_{p^e}: field construction, extensions, traces.

Field elements are little-endian coefficient tuples over F_p with respect
to the power basis of the modulus root.  Field objects are immutable after
construction and safe to share across threads; elements are plain tuples.
"""

from __future__ import annotations

DEFAULT_SIZE_CAP = 2 ** 24

# An element of F_{p^e}: tuple of e residues mod p, little-endian.
Element = tuple


class ParameterError(ValueError):
    """Invalid construction parameters (non-prime p, bad degree, ...)."""


class SizeCapError(ParameterError):
    """The requested field would exceed the configured size cap."""


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n):
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n):
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def count_irreducibles(q, d):
    """Number of monic irreducible polynomials of degree d over F_q.

    Computed by Moebius inversion of q^d = sum_{b|d} b*I_q(b).
    """
    if d < 1:
        raise ParameterError("degree must be positive")
    total = sum(mobius(d // b) * q ** b for b in divisors(d))
    count, rem = divmod(total, d)
    assert rem == 0
    return count


# ---------------------------------------------------------------------------
# Polynomials over F_p as little-endian int lists (used for moduli and for
# element inversion; no trailing zeros).
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    """Remainder of a modulo monic f."""
    a = list(a)
    _ptrim(a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1]
        if c:
            shift = len(a) - 1 - df
            for j in range(df):
                a[shift + j] = (a[shift + j] - c * f[j]) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    _ptrim(a)
    _ptrim(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        bm = [(c * inv_lead) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _ppowmod(base, exp, f, p):
    """base^exp mod monic f over F_p."""
    result = [1]
    base = _pmod(base, f, p)
    while exp:
        if exp & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        exp >>= 1
    return result


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pdivmod(a, b, p):
    """Quotient and remainder of a by nonzero b over F_p."""
    rem = list(a)
    _ptrim(rem)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        c = (rem[-1] * inv_lead) % p
        shift = len(rem) - 1 - db
        q[shift] = c
        if c:
            for j in range(db + 1):
                rem[shift + j] = (rem[shift + j] - c * b[j]) % p
        rem.pop()
        _ptrim(rem)
    return _ptrim(q), rem


def _pinvmod(a, f, p):
    """Inverse of a modulo monic irreducible f (extended Euclid)."""
    r0, r1 = list(f), _pmod(a, f, p)
    s0, s1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    lead_inv = pow(r0[0], p - 2, p)
    return _ptrim([(c * lead_inv) % p for c in s0])


def _is_irreducible_fp(f, p):
    """Irreducibility of monic f over F_p (Rabin's test)."""
    e = len(f) - 1
    if e < 1:
        return False
    x = [0, 1]
    for ell in prime_factors(e):
        h = _ppowmod(x, p ** (e // ell), f, p)
        g = _pgcd(_psub(h, x, p), f, p)
        if len(g) != 1:
            return False
    h = _ppowmod(x, p ** e, f, p)
    return not _psub(h, x, p)


# ---------------------------------------------------------------------------
# Finite fields
# ---------------------------------------------------------------------------

class FiniteField:
    """F_{p^e} with a deterministic modulus and primitive element.

    The modulus is the monic irreducible of degree e over F_p whose
    coefficient tuple encodes to the least integer (sum c_i p^i); the
    primitive element is the least element (same encoding) of full
    multiplicative order.
    """

    def __init__(self, p, e=1, modulus=None, size_cap=DEFAULT_SIZE_CAP):
        if not is_prime(p):
            raise ParameterError(f"p = {p} is not prime")
        if e < 1:
            raise ParameterError("extension degree must be >= 1")
        if p ** e > size_cap:
            raise SizeCapError(f"p^e = {p ** e} exceeds size cap {size_cap}")
        self.p = p
        self.e = e
        self.q = p ** e
        if modulus is None:
            modulus = self._find_modulus()
        else:
            modulus = list(modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ParameterError("modulus must be monic of degree e")
            if not _is_irreducible_fp(modulus, p):
                raise ParameterError("modulus is not irreducible")
        self.modulus = tuple(modulus)
        self.zero = (0,) * e
        self.one = (1,) + (0,) * (e - 1)
        self._xpow = self._reduction_table()
        self.primitive = self._find_primitive()
        self._trvec = None
        self._frob = None

    def __repr__(self):
        return f"FiniteField({self.p}, {self.e})"

    def _find_modulus(self):
        p, e = self.p, self.e
        if e == 1:
            return [0, 1]
        for code in range(p ** e):
            coeffs = []
            c = code
            for _ in range(e):
                coeffs.append(c % p)
                c //= p
            if coeffs[0] == 0:
                continue  # divisible by x
            f = coeffs + [1]
            if _is_irreducible_fp(f, p):
                return f
        raise AssertionError("no irreducible polynomial found")

    def _reduction_table(self):
        p, e = self.p, self.e
        if e == 1:
            return []
        # x^(e+k) mod modulus for k = 0 .. e-2
        r = [(-self.modulus[i]) % p for i in range(e)]
        table = [tuple(r)]
        for _ in range(e - 2):
            top = r[-1]
            r = [0] + r[:-1]
            if top:
                r = [(r[j] + top * table[0][j]) % p for j in range(e)]
            table.append(tuple(r))
        return table

    def _find_primitive(self):
        if self.q == 2:
            return self.one
        factors = prime_factors(self.q - 1)
        for idx in range(2, self.q):
            x = self.element(idx)
            if all(self.pow_(x, (self.q - 1) // ell) != self.one
                   for ell in factors):
                return x
        raise AssertionError("no primitive element found")

    # -- element encoding ---------------------------------------------------

    def element(self, value):
        """Element from an integer code (base-p digits) or coefficient list."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ParameterError(f"element code {value} out of range")
            coeffs = []
            for _ in range(self.e):
                coeffs.append(value % self.p)
                value //= self.p
            return tuple(coeffs)
        coeffs = tuple(c % self.p for c in value)
        if len(coeffs) != self.e:
            raise ParameterError("coefficient tuple has wrong length")
        return coeffs

    def index(self, x):
        """Integer code of an element (inverse of element())."""
        code = 0
        for c in reversed(x):
            code = code * self.p + c
        return code

    def elements(self):
        """All field elements in code order."""
        return (self.element(i) for i in range(self.q))

    def scalar(self, c):
        """Embed an integer (element of F_p) as a field element."""
        return (c % self.p,) + (0,) * (self.e - 1)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def smul(self, c, a):
        """Multiply by an integer scalar."""
        p = self.p
        c %= p
        return tuple((c * x) % p for x in a)

    def mul(self, a, b):
        p = self.p
        e = self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        acc = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    acc[i + j] += ai * bj
        for k in range(2 * e - 2, e - 1, -1):
            c = acc[k] % p
            if c:
                xp = self._xpow[k - e]
                for j in range(e):
                    acc[j] += c * xp[j]
        return tuple(v % p for v in acc[:e])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.e == 1:
            return (pow(a[0], self.p - 2, self.p),)
        s = _pinvmod(list(a), list(self.modulus), self.p)
        return tuple(s + [0] * (self.e - len(s)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_(self, a, k):
        if k < 0:
            a = self.inv(a)
            k = -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def multiplicative_order(self, a):
        if a == self.zero:
            raise ParameterError("zero has no multiplicative order")
        order = self.q - 1
        for ell in prime_factors(self.q - 1):
            while order % ell == 0 and self.pow_(a, order // ell) == self.one:
                order //= ell
        return order

    # -- Frobenius and trace --------------------------------------------------

    def _frob_table(self):
        if self._frob is None:
            alpha_p = self.pow_(self.element([0, 1] + [0] * (self.e - 2))
                                if self.e > 1 else self.one, self.p)
            images = [self.one]
            for _ in range(1, self.e):
                images.append(self.mul(images[-1], alpha_p))
            self._frob = images
        return self._frob

    def frobenius(self, x):
        """x^p, computed as an F_p-linear map."""
        if self.e == 1:
            return x
        images = self._frob_table()
        acc = [0] * self.e
        for i, c in enumerate(x):
            if c:
                img = images[i]
                for j in range(self.e):
                    acc[j] += c * img[j]
        return tuple(v % self.p for v in acc)

    def pth_root(self, x):
        """Unique p-th root (inverse Frobenius)."""
        for _ in range(self.e - 1):
            x = self.frobenius(x)
        return x

    def trace(self, x):
        """Absolute trace to F_p, returned as an integer residue."""
        if self.e == 1:
            return x[0]
        if self._trvec is None:
            vec = []
            for i in range(self.e):
                y = self.element([0] * i + [1] + [0] * (self.e - 1 - i))
                acc = y
                for _ in range(self.e - 1):
                    y = self.frobenius(y)
                    acc = self.add(acc, y)
                assert all(c == 0 for c in acc[1:])
                vec.append(acc[0])
            self._trvec = vec
        return sum(c * t for c, t in zip(x, self._trvec)) % self.p

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return self.element(rng.randrange(lo, self.q))


class FieldExtension:
    """F_{p^{ed}} together with the embedding of F_{p^e} fixing F_p."""

    def __init__(self, base, d, size_cap=DEFAULT_SIZE_CAP):
        if d < 1:
            raise ParameterError("extension degree must be >= 1")
        self.base = base
        self.d = d
        self.ext = (base if d == 1 else
                    FiniteField(base.p, base.e * d, size_cap=size_cap))
        self._root = self._find_root()
        powers = [self.ext.one]
        for _ in range(1, base.e):
            powers.append(self.ext.mul(powers[-1], self._root))
        self._root_powers = powers
        self._qfrob = None
        self._coord_inv = None

    def _find_root(self):
        """A root in the extension of the base field's modulus."""
        base, ext = self.base, self.ext
        if base.e == 1:
            return ext.zero  # modulus is x
        if self.d == 1:
            return ext.element([0, 1] + [0] * (ext.e - 2))
        # Roots lie in the subfield of order q; scan its q elements.
        gamma = ext.pow_(ext.primitive, (ext.q - 1) // (base.q - 1))
        candidates = [ext.zero, ext.one]
        g = ext.one
        for _ in range(base.q - 2):
            g = ext.mul(g, gamma)
            candidates.append(g)
        mod = self.base.modulus
        for cand in candidates:
            acc = ext.zero
            for c in reversed(mod):
                acc = ext.mul(acc, cand)
                if c:
                    acc = ext.add(acc, ext.scalar(c))
            if acc == ext.zero:
                return cand
        raise AssertionError("no root of base modulus in extension")

    def embed(self, x):
        ext = self.ext
        acc = ext.zero
        for c, rp in zip(x, self._root_powers):
            if c:
                acc = ext.add(acc, ext.smul(c, rp))
        return acc

    def relative_frobenius(self, x):
        """x^q on the extension, q the base field order (linear map)."""
        ext = self.ext
        if self.d == 1:
            return x
        if self._qfrob is None:
            alpha = ext.element([0, 1] + [0] * (ext.e - 2))
            aq = ext.pow_(alpha, self.base.q)
            images = [ext.one]
            for _ in range(1, ext.e):
                images.append(ext.mul(images[-1], aq))
            self._qfrob = images
        acc = [0] * ext.e
        for i, c in enumerate(x):
            if c:
                img = self._qfrob[i]
                for j in range(ext.e):
                    acc[j] += c * img[j]
        return tuple(v % ext.p for v in acc)

    def coords(self, y):
        """Coordinates of y in the base-field basis {g^u : u < d}.

        g is the extension's primitive element; returns a tuple of d base
        field elements a_u with y = sum embed(a_u) * g^u.
        """
        base, ext = self.base, self.ext
        if self.d == 1:
            return (y,)
        p, n = ext.p, ext.e
        if self._coord_inv is None:
            cols = []
            gpow = ext.one
            for _ in range(self.d):
                for i in range(base.e):
                    basis_el = [0] * base.e
                    basis_el[i] = 1
                    cols.append(ext.mul(self.embed(tuple(basis_el)), gpow))
                gpow = ext.mul(gpow, ext.primitive)
            # invert the n x n matrix whose columns are cols, over F_p
            mat = [[cols[j][i] for j in range(n)] + [1 if k == i else 0
                   for k in range(n)] for i in range(n)]
            for col in range(n):
                piv = next(r for r in range(col, n) if mat[r][col])
                mat[col], mat[piv] = mat[piv], mat[col]
                inv_p = pow(mat[col][col], p - 2, p)
                mat[col] = [(v * inv_p) % p for v in mat[col]]
                for r in range(n):
                    if r != col and mat[r][col]:
                        c = mat[r][col]
                        mat[r] = [(v - c * w) % p
                                  for v, w in zip(mat[r], mat[col])]
            self._coord_inv = [row[n:] for row in mat]
        vec = [sum(self._coord_inv[i][j] * y[j] for j in range(n)) % p
               for i in range(n)]
        return tuple(tuple(vec[u * base.e + i] for i in range(base.e))
                     for u in range(self.d))


_field_cache = {}
_extension_cache = {}


def build_field(p, e=1, size_cap=DEFAULT_SIZE_CAP):
    """Construct (or fetch the cached) F_{p^e}."""
    key = (p, e, size_cap)
    if key not in _field_cache:
        _field_cache[key] = FiniteField(p, e, size_cap=size_cap)
    return _field_cache[key]


def extend_field(base, d, size_cap=DEFAULT_SIZE_CAP):
    """Construct (or fetch the cached) embedding F_{p^e} -> F_{p^{ed}}."""
    key = (id(base), d, size_cap)
    if key not in _extension_cache:
        _extension_cache[key] = FieldExtension(base, d, size_cap=size_cap)
    return _extension_cache[key]
