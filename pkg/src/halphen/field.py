"""Exact coefficient fields for plane-curve computations.

Every field element here is exact; no floating point is used anywhere.
Supported fields:

 - Q(e), the rationals extended by a primitive cube root of unity e
   (e^2 + e + 1 = 0), represented on the basis {1, e} with Fraction
   coordinates.
 - Q(e)(a), the rational function field in one indeterminate a over Q(e),
   represented as a reduced fraction of dense coefficient lists with a
   monic denominator.
 - GF(p) for a prime p, and GF(p^k) as residue polynomials modulo an
   irreducible modulus.

Characteristic 3 is always rejected.  Characteristic 2 is rejected unless
requested explicitly (it is needed only for the binary incidence code).

Elements overload +, -, *, / and ==; integers coerce automatically, so
formulas can be written as plain Python expressions.  A canonical text
form (e.g. ``(-1 - 1*e)*a^2``) is provided for every element together
with a parser for the same syntax.
"""

from fractions import Fraction


class FieldError(Exception):
    pass


class MixedContextError(FieldError):
    """Raised when two elements of different fields are combined."""


class BadSpecializationError(FieldError):
    """Raised when a substitution hits a vanishing denominator."""


# ---------------------------------------------------------------------------
# field contexts


class Field:
    """Base class for field contexts.  One instance = one field."""

    characteristic = 0
    is_finite = False

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        raise NotImplementedError

    def coerce(self, x):
        """Coerce an int or element of this field; raise otherwise."""
        if isinstance(x, int):
            return self.from_int(x)
        if getattr(x, "field", None) is self:
            return x
        raise MixedContextError(f"cannot coerce {x!r} into {self}")

    def has_eps(self):
        """True if the field contains a primitive cube root of unity."""
        raise NotImplementedError

    def eps(self):
        raise NotImplementedError

    def elements(self):
        raise FieldError(f"{self} is not a finite field")

    def random_element(self, rng):
        raise NotImplementedError


def _require_char_ok(p, allow_char2):
    if p == 3:
        raise FieldError("characteristic 3 is not supported")
    if p == 2 and not allow_char2:
        raise FieldError("characteristic 2 requires allow_char2=True")


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class QEpsField(Field):
    """The field Q(e) with e^2 + e + 1 = 0, elements c0 + c1*e."""

    characteristic = 0

    def coerce(self, x):
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        return super().coerce(x)

    def from_int(self, n):
        return QEpsElem(self, Fraction(n), Fraction(0))

    def from_fraction(self, q):
        return QEpsElem(self, Fraction(q), Fraction(0))

    def make(self, c0, c1=0):
        return QEpsElem(self, Fraction(c0), Fraction(c1))

    def has_eps(self):
        return True

    def eps(self):
        return QEpsElem(self, Fraction(0), Fraction(1))

    def random_element(self, rng):
        def frac():
            return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return QEpsElem(self, frac(), frac())

    def __repr__(self):
        return "Q(e)"


class QEpsElem:
    __slots__ = ("field", "c0", "c1")

    def __init__(self, field, c0, c1):
        self.field = field
        self.c0 = c0
        self.c1 = c1

    def is_zero(self):
        return self.c0 == 0 and self.c1 == 0

    def _check(self, other):
        # defer to the reflected operation of richer algebras
        if isinstance(other, (int, Fraction, QEpsElem)):
            return self.field.coerce(other)
        if isinstance(other, (GFpElem, GFpkElem)):
            raise MixedContextError("cannot mix Q(e) with finite-field elements")
        return None

    def __add__(self, other):
        o = other if isinstance(other, QEpsElem) else self._check(other)
        if o is None:
            return NotImplemented
        return QEpsElem(self.field, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, QEpsElem) else self._check(other)
        if o is None:
            return NotImplemented
        return QEpsElem(self.field, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QEpsElem(self.field, -self.c0, -self.c1)

    def __mul__(self, other):
        o = other if isinstance(other, QEpsElem) else self._check(other)
        if o is None:
            return NotImplemented
        # (c0 + c1 e)(d0 + d1 e) with e^2 = -1 - e
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        if b == 0 and d == 0:
            return QEpsElem(self.field, a * c, b)
        return QEpsElem(self.field, a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(e)")
        a, b = self.c0, self.c1
        norm = a * a - a * b + b * b
        # conjugate is (a - b) - b e
        return QEpsElem(self.field, (a - b) / norm, -b / norm)

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c0 == other and self.c1 == 0
        if not isinstance(other, QEpsElem):
            return NotImplemented
        return self.c0 == other.c0 and self.c1 == other.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def conjugate(self):
        return QEpsElem(self.field, self.c0 - self.c1, -self.c1)

    def __repr__(self):
        return to_text(self)


# ---------------------------------------------------------------------------
# dense univariate polynomials over a field, as plain lists (low degree
# first, no trailing zeros, [] is the zero polynomial)


def pnormalize(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def pdeg(p):
    return len(p) - 1


def padd(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        if i < len(p) and i < len(q):
            out.append(p[i] + q[i])
        elif i < len(p):
            out.append(p[i])
        else:
            out.append(q[i])
    return pnormalize(out)


def pneg(p):
    return [-c for c in p]


def psub(p, q):
    return padd(p, pneg(q))


def pmul(p, q, field):
    if not p or not q:
        return []
    out = [field.zero() for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return pnormalize(out)


def pscale(p, c):
    if c.is_zero():
        return []
    return [a * c for a in p]


def pdivmod(p, q, field):
    """Polynomial division with remainder over a field."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [field.zero() for _ in range(max(len(p) - len(q) + 1, 0))]
    inv_lead = q[-1].inverse()
    while len(rem) >= len(q):
        c = rem[-1] * inv_lead
        k = len(rem) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] = rem[k + i] - c * b
        rem = pnormalize(rem)
        if not rem:
            break
    return pnormalize(quo), rem


def pexact_div(p, q, field):
    quo, rem = pdivmod(p, q, field)
    if rem:
        raise FieldError("inexact polynomial division")
    return quo


def pgcd(p, q, field):
    """Monic gcd of two univariate polynomials."""
    a, b = list(p), list(q)
    while b:
        _, r = pdivmod(a, b, field)
        a, b = b, r
    if a:
        a = pscale(a, a[-1].inverse())
    return a


def peval(p, x, field):
    acc = field.zero()
    for c in reversed(p):
        acc = acc * x + c
    return acc


def proots_in_field(p, field):
    """All roots of p lying in the coefficient field itself.

    Finite fields are scanned exhaustively; elsewhere only degree <= 1
    factors are resolved (which is all the geometry needs).
    """
    if not p:
        raise FieldError("the zero polynomial has every root")
    if field.is_finite:
        return [x for x in field.elements() if peval(p, x, field).is_zero()]
    if pdeg(p) == 0:
        return []
    if pdeg(p) == 1:
        return [-p[0] / p[1]]
    raise FieldError("root extraction beyond linear factors needs a finite field")


# ---------------------------------------------------------------------------
# Q(e)(a): rational functions in one variable over Q(e)


class RatFuncField(Field):
    """The rational function field Q(e)(a)."""

    characteristic = 0

    def __init__(self):
        self._base = QQ_EPS

    @property
    def base(self):
        return self._base

    def coerce(self, x):
        if isinstance(x, (Fraction, QEpsElem)):
            return self.from_base(self._base.coerce(x))
        return super().coerce(x)

    def from_int(self, n):
        b = self._base.from_int(n)
        return RatFuncElem(self, [b] if not b.is_zero() else [], [self._base.one()])

    def from_base(self, c):
        c = self._base.coerce(c)
        return RatFuncElem(self, [c] if not c.is_zero() else [], [self._base.one()])

    def from_coeffs(self, num, den=None):
        num = [self._base.coerce(c) for c in num]
        den = [self._base.coerce(c) for c in den] if den is not None else [self._base.one()]
        return RatFuncElem(self, pnormalize(num), pnormalize(den))

    def gen(self):
        """The indeterminate a."""
        z, o = self._base.zero(), self._base.one()
        return RatFuncElem(self, [z, o], [o])

    def has_eps(self):
        return True

    def eps(self):
        return self.from_base(self._base.eps())

    def random_element(self, rng):
        num = [self._base.random_element(rng) for _ in range(rng.randint(1, 3))]
        den = [self._base.random_element(rng) for _ in range(rng.randint(1, 3))]
        den = pnormalize(den)
        if not den:
            den = [self._base.one()]
        return RatFuncElem(self, pnormalize(num), den)

    def __repr__(self):
        return "Q(e)(a)"


class RatFuncElem:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator in Q(e)(a)")
        base = field.base
        if not num:
            den = [base.one()]
        elif len(den) > 1:
            g = pgcd(num, den, base)
            if g and pdeg(g) > 0:
                num = pexact_div(num, g, base)
                den = pexact_div(den, g, base)
        lead = den[-1]
        if not (lead.c0 == 1 and lead.c1 == 0):
            inv = lead.inverse()
            num = pscale(num, inv)
            den = pscale(den, inv)
        self.field = field
        self.num = tuple(num)
        self.den = tuple(den)

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return len(self.den) == 1

    def _check(self, other):
        if isinstance(other, (int, Fraction, QEpsElem, RatFuncElem)):
            return self.field.coerce(other)
        if isinstance(other, (GFpElem, GFpkElem)):
            raise MixedContextError("cannot mix Q(e)(a) with finite-field elements")
        return None

    def __add__(self, other):
        o = other if isinstance(other, RatFuncElem) else self._check(other)
        if o is None:
            return NotImplemented
        base = self.field.base
        if self.den == o.den:
            return RatFuncElem(self.field,
                               padd(list(self.num), list(o.num)), list(self.den))
        num = padd(pmul(list(self.num), list(o.den), base),
                   pmul(list(o.num), list(self.den), base))
        den = pmul(list(self.den), list(o.den), base)
        return RatFuncElem(self.field, num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncElem(self.field, pneg(list(self.num)), list(self.den))

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = other if isinstance(other, RatFuncElem) else self._check(other)
        if o is None:
            return NotImplemented
        base = self.field.base
        num = pmul(list(self.num), list(o.num), base)
        den = pmul(list(self.den), list(o.den), base)
        return RatFuncElem(self.field, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(e)(a)")
        return RatFuncElem(self.field, list(self.den), list(self.num))

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QEpsElem)):
            other = self.field.coerce(other)
        if not isinstance(other, RatFuncElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return to_text(self)


# ---------------------------------------------------------------------------
# GF(p)


class PrimeField(Field):
    is_finite = True

    def __init__(self, p, allow_char2=False):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        _require_char_ok(p, allow_char2)
        self.p = p
        self.characteristic = p
        self.size = p
        self._eps_cache = None

    def from_int(self, n):
        return GFpElem(self, n % self.p)

    def has_eps(self):
        return self.p % 3 == 1

    def eps(self):
        if self._eps_cache is None:
            if not self.has_eps():
                raise FieldError(f"GF({self.p}) has no primitive cube root of unity")
            for v in range(2, self.p):
                if pow(v, 3, self.p) == 1:
                    self._eps_cache = GFpElem(self, v)
                    break
        return self._eps_cache

    def elements(self):
        for v in range(self.p):
            yield GFpElem(self, v)

    def random_element(self, rng):
        return GFpElem(self, rng.randrange(self.p))

    def __repr__(self):
        return f"GF({self.p})"


class GFpElem:
    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v % field.p

    def is_zero(self):
        return self.v == 0

    def _check(self, other):
        if isinstance(other, (int, GFpElem)):
            return self.field.coerce(other)
        if isinstance(other, (QEpsElem, RatFuncElem, GFpkElem)):
            raise MixedContextError("cannot mix prime-field elements with other scalars")
        return None

    def __add__(self, other):
        o = other if isinstance(other, GFpElem) else self._check(other)
        if o is None:
            return NotImplemented
        return GFpElem(self.field, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, GFpElem) else self._check(other)
        if o is None:
            return NotImplemented
        return GFpElem(self.field, self.v - o.v)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GFpElem(self.field, -self.v)

    def __mul__(self, other):
        o = other if isinstance(other, GFpElem) else self._check(other)
        if o is None:
            return NotImplemented
        return GFpElem(self.field, self.v * o.v)

    __rmul__ = __mul__

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        return GFpElem(self.field, pow(self.v, self.field.p - 2, self.field.p))

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == other % self.field.p
        if not isinstance(other, GFpElem):
            return NotImplemented
        if self.field is not other.field:
            return False
        return self.v == other.v

    def __hash__(self):
        return hash((self.field.p, self.v))

    def __repr__(self):
        return str(self.v)


# ---------------------------------------------------------------------------
# GF(p^k)


def _gfp_poly_mulmod(u, w, modulus, p):
    out = [0] * (len(u) + len(w) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(w):
                out[i + j] = (out[i + j] + x * y) % p
    # reduce modulo the monic modulus
    k = len(modulus) - 1
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            for j in range(k + 1):
                out[i - k + j] = (out[i - k + j] - c * modulus[j]) % p
    out = out[:k]
    while len(out) < k:
        out.append(0)
    return out


def _gfp_poly_is_irreducible(poly, p):
    """Irreducibility over GF(p) by scanning monic divisors (small degrees)."""
    d = len(poly) - 1
    if d < 1:
        return False
    field = PrimeField(p, allow_char2=True) if p == 2 else PrimeField(p)
    fp = [field.from_int(c) for c in poly]
    for ddeg in range(1, d // 2 + 1):
        for code in range(p ** ddeg):
            coeffs, c = [], code
            for _ in range(ddeg):
                coeffs.append(field.from_int(c % p))
                c //= p
            coeffs.append(field.one())
            _, rem = pdivmod(fp, coeffs, field)
            if not rem:
                return False
    return True


def find_irreducible(p, k, allow_char2=False):
    """First monic irreducible polynomial of degree k over GF(p), by code order."""
    _require_char_ok(p, allow_char2)
    for code in range(p ** k):
        coeffs, c = [], code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        if _gfp_poly_is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError("no irreducible polynomial found")  # unreachable


class PrimeExtField(Field):
    """GF(p^k) with elements represented as residue polynomials in g."""

    is_finite = True

    def __init__(self, p, modulus=None, k=None, allow_char2=False):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        _require_char_ok(p, allow_char2)
        if modulus is None:
            if k is None or k < 2:
                raise FieldError("an extension degree k >= 2 or a modulus is required")
            modulus = find_irreducible(p, k, allow_char2=allow_char2)
        modulus = tuple(c % p for c in modulus)
        if modulus[-1] != 1:
            raise FieldError("extension modulus must be monic")
        if not _gfp_poly_is_irreducible(list(modulus), p):
            raise FieldError("extension modulus is reducible")
        self.p = p
        self.characteristic = p
        self.modulus = modulus
        self.k = len(modulus) - 1
        self.size = p ** self.k
        self._eps_cache = None

    def from_int(self, n):
        return GFpkElem(self, (n % self.p,) + (0,) * (self.k - 1))

    def from_coeffs(self, coeffs):
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise FieldError("residue degree too large")
        coeffs += [0] * (self.k - len(coeffs))
        return GFpkElem(self, tuple(coeffs))

    def gen(self):
        return self.from_coeffs([0, 1])

    def has_eps(self):
        return self.size % 3 == 1

    def eps(self):
        if self._eps_cache is None:
            if not self.has_eps():
                raise FieldError(f"{self} has no primitive cube root of unity")
            one = self.one()
            for x in self.elements():
                if x == one or x.is_zero():
                    continue
                if x * x * x == one:
                    self._eps_cache = x
                    break
        return self._eps_cache

    def elements(self):
        for code in range(self.size):
            coeffs, c = [], code
            for _ in range(self.k):
                coeffs.append(c % self.p)
                c //= self.p
            yield GFpkElem(self, tuple(coeffs))

    def random_element(self, rng):
        return GFpkElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


class GFpkElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def _check(self, other):
        if isinstance(other, (int, GFpkElem)):
            return self.field.coerce(other)
        if isinstance(other, (QEpsElem, RatFuncElem, GFpElem)):
            raise MixedContextError("cannot mix extension-field elements with other scalars")
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return GFpkElem(self.field,
                        tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return GFpkElem(self.field,
                        tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.field.p
        return GFpkElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = other if isinstance(other, GFpkElem) else self._check(other)
        if o is None:
            return NotImplemented
        field = self.field
        if field.k == 2:
            # g^2 = -m0 - m1*g for the monic modulus (m0, m1, 1)
            a0, a1 = self.coeffs
            b0, b1 = o.coeffs
            p = field.p
            m0, m1, _ = field.modulus
            high = a1 * b1
            return GFpkElem(field, ((a0 * b0 - high * m0) % p,
                                    (a0 * b1 + a1 * b0 - high * m1) % p))
        out = _gfp_poly_mulmod(self.coeffs, o.coeffs, field.modulus, field.p)
        return GFpkElem(field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        # extended Euclid in GF(p)[X] against the modulus
        p = self.field.p
        fp = PrimeField(p, allow_char2=True)
        a = pnormalize([fp.from_int(c) for c in self.coeffs])
        m = [fp.from_int(c) for c in self.field.modulus]
        r0, r1 = m, a
        s0, s1 = [], [fp.one()]
        while r1:
            q, r = pdivmod(r0, r1, fp)
            r0, r1 = r1, r
            s0, s1 = s1, psub(s0, pmul(q, s1, fp))
        inv_lead = r0[-1].inverse()
        s0 = pscale(s0, inv_lead)
        return self.field.from_coeffs([c.v for c in s0])

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == self.field.from_int(other).coeffs
        if not isinstance(other, GFpkElem):
            return NotImplemented
        if self.field is not other.field:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __repr__(self):
        return to_text(self)


# shared context instances; Q(e) and Q(e)(a) are canonical singletons
QQ_EPS = QEpsField()
QQ_EPS_A = RatFuncField()

_prime_field_cache = {}


def GF(p, allow_char2=False):
    key = (p, allow_char2)
    if key not in _prime_field_cache:
        _prime_field_cache[key] = PrimeField(p, allow_char2=allow_char2)
    return _prime_field_cache[key]


_ext_field_cache = {}


def GFext(p, k, allow_char2=False):
    key = (p, k, allow_char2)
    if key not in _ext_field_cache:
        _ext_field_cache[key] = PrimeExtField(p, k=k, allow_char2=allow_char2)
    return _ext_field_cache[key]


# ---------------------------------------------------------------------------
# specialization: ring homomorphisms into concrete fields


def rational_to_field(q, target):
    q = Fraction(q)
    num = target.from_int(q.numerator)
    den = target.from_int(q.denominator)
    if den.is_zero():
        raise BadSpecializationError(
            f"denominator {q.denominator} vanishes in {target}")
    return num / den


def specialize_scalar(x, target, eps_image=None, a_image=None):
    """Map a Q(e) or Q(e)(a) element into `target` via e -> eps_image, a -> a_image.

    The map is a ring homomorphism wherever it is defined; a vanishing
    denominator raises BadSpecializationError naming the culprit.
    """
    if isinstance(x, int):
        return target.from_int(x)
    if isinstance(x, QEpsElem):
        if x.c1 != 0:
            if eps_image is None:
                raise BadSpecializationError("an eps image is required")
            _check_eps_image(eps_image, target)
        c0 = rational_to_field(x.c0, target)
        if x.c1 == 0:
            return c0
        return c0 + rational_to_field(x.c1, target) * eps_image
    if isinstance(x, RatFuncElem):
        if a_image is None and pdeg(list(x.num)) < 1 and pdeg(list(x.den)) < 1:
            a_image = target.zero()  # constant: the image of a is irrelevant
        if a_image is None:
            raise BadSpecializationError("an a image is required")
        num = _eval_qeps_poly(x.num, target, eps_image, a_image)
        den = _eval_qeps_poly(x.den, target, eps_image, a_image)
        if den.is_zero():
            raise BadSpecializationError(
                f"denominator {to_text(x)} vanishes at the chosen a")
        return num / den
    if getattr(x, "field", None) is target:
        return x
    raise MixedContextError(f"cannot specialize {x!r}")


def _check_eps_image(eps_image, target):
    one = target.one()
    if eps_image == one or not (eps_image * eps_image * eps_image == one):
        raise BadSpecializationError(
            "eps image must be a primitive cube root of unity")


def _eval_qeps_poly(coeffs, target, eps_image, a_image):
    acc = target.zero()
    for c in reversed(coeffs):
        acc = acc * a_image + specialize_scalar(c, target, eps_image, None)
    return acc


# ---------------------------------------------------------------------------
# canonical text form and parsing


def _frac_str(q):
    return str(q)


def _qeps_str(x, mult_context=False):
    """Canonical string for a Q(e) element.

    With mult_context=True the result is parenthesised whenever it would
    not bind tightly under '*'.
    """
    if x.c1 == 0:
        s = _frac_str(x.c0)
        if mult_context and (x.c0 < 0 or x.c0.denominator != 1):
            return f"({s})"
        return s
    parts = []
    if x.c0 != 0:
        parts.append(_frac_str(x.c0))
    c1 = x.c1
    term = f"{_frac_str(c1)}*e"
    if parts:
        if c1 < 0:
            parts.append(f"- {_frac_str(-c1)}*e")
        else:
            parts.append(f"+ {term}")
        s = " ".join(parts)
    else:
        s = term
    if mult_context:
        return f"({s})"
    return s


def _qeps_poly_str(coeffs, var="a"):
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            terms.append(_qeps_str(c))
        else:
            head = "" if c == 1 else f"{_qeps_str(c, mult_context=True)}*"
            powr = var if k == 1 else f"{var}^{k}"
            terms.append(f"{head}{powr}")
    return " + ".join(terms).replace("+ -", "- ")


def to_text(x):
    """Canonical text form of a field element."""
    if isinstance(x, QEpsElem):
        return _qeps_str(x)
    if isinstance(x, RatFuncElem):
        num = _qeps_poly_str(list(x.num))
        if x.is_polynomial():
            return num
        den = _qeps_poly_str(list(x.den))
        return f"({num})/({den})"
    if isinstance(x, GFpElem):
        return str(x.v)
    if isinstance(x, GFpkElem):
        coeffs = x.coeffs
        terms = []
        for k in range(len(coeffs) - 1, -1, -1):
            c = coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                powr = "g" if k == 1 else f"g^{k}"
                terms.append(f"{head}{powr}")
        return " + ".join(terms) if terms else "0"
    raise FieldError(f"cannot serialize {x!r}")


class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        ch = self.text[self.pos]
        if ch.isdigit():
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("int", self.text[self.pos:j])
        if ch.isalpha():
            j = self.pos
            while j < len(self.text) and self.text[j].isalnum():
                j += 1
            return ("name", self.text[self.pos:j])
        return ("op", ch)

    def next(self):
        tok = self.peek()
        if tok is not None:
            self.pos += len(tok[1])
        return tok


def parse_expression(text, env, one):
    """Parse canonical text into whatever algebra `env` maps names to.

    `env` maps symbol names to values; `one` is the multiplicative unit of
    the target algebra (used for integer literals).  Supports + - * / ^
    and parentheses.
    """
    tk = _Tokenizer(text)

    def parse_expr():
        node = parse_term()
        while True:
            tok = tk.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                tk.next()
                rhs = parse_term()
                node = node + rhs if tok[1] == "+" else node - rhs
            else:
                return node

    def parse_term():
        node = parse_factor()
        while True:
            tok = tk.peek()
            if tok and tok[0] == "op" and tok[1] in "*/":
                tk.next()
                rhs = parse_factor()
                node = node * rhs if tok[1] == "*" else node / rhs
            else:
                return node

    def parse_factor():
        tok = tk.peek()
        if tok and tok[0] == "op" and tok[1] == "-":
            tk.next()
            return -parse_factor()
        if tok and tok[0] == "op" and tok[1] == "+":
            tk.next()
            return parse_factor()
        return parse_power()

    def parse_power():
        base = parse_atom()
        tok = tk.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            tk.next()
            exp_tok = tk.next()
            if exp_tok is None or exp_tok[0] != "int":
                raise FieldError("exponent must be an integer literal")
            n = int(exp_tok[1])
            out = one
            for _ in range(n):
                out = out * base
            return out
        return base

    def parse_atom():
        tok = tk.next()
        if tok is None:
            raise FieldError("unexpected end of expression")
        if tok[0] == "int":
            return int(tok[1]) * one
        if tok[0] == "name":
            if tok[1] not in env:
                raise FieldError(f"unknown symbol {tok[1]!r}")
            return env[tok[1]]
        if tok[1] == "(":
            node = parse_expr()
            closing = tk.next()
            if closing is None or closing[1] != ")":
                raise FieldError("missing closing parenthesis")
            return node
        raise FieldError(f"unexpected token {tok[1]!r}")

    node = parse_expr()
    if tk.peek() is not None:
        raise FieldError(f"trailing input at position {tk.pos}")
    return node


def parse_element(text, field):
    """Parse the canonical text form of a scalar over `field`."""
    env = {}
    if field.has_eps():
        env["e"] = field.eps()
    if isinstance(field, RatFuncField):
        env["a"] = field.gen()
    if isinstance(field, PrimeExtField):
        env["g"] = field.gen()
    return parse_expression(text, env, field.one())
