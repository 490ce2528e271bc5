"""Exact coefficient fields.

A field context owns the arithmetic; elements are bare, hashable, canonical
payloads so that ``==`` is field equality:

========================  ===============================================
context                   payload
========================  ===============================================
:data:`QQ`                :class:`fractions.Fraction`
:class:`PrimeField`       ``int`` in ``range(p)``
:class:`Extension`        tuple of base payloads, reduced mod the modulus
:class:`RatFunc`          ``(num, den)`` pair of base-coefficient tuples,
                          coprime, ``den`` monic
========================  ===============================================

>>> F7 = PrimeField(7)
>>> F7.inv(3)
5
>>> K = RatFunc(QQ)
>>> K.make((Fraction(-1), Fraction(0), Fraction(1)), (Fraction(-1), Fraction(1)))
((Fraction(1, 1), Fraction(1, 1)), (Fraction(1, 1),))
"""

import itertools
import math
from fractions import Fraction

from . import dense
from .errors import (InvalidField, PoleAtSpecialization, ZeroDenominator,
                     ZeroDivisor, ZeroInversion)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n):
    """Trial division below 2**31, Miller-Rabin with fixed witnesses above."""
    if n < 2:
        return False
    if n < 2 ** 31:
        if n % 2 == 0:
            return n == 2
        for d in range(3, math.isqrt(n) + 1, 2):
            if n % d == 0:
                return False
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def rational_candidates():
    """0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, ... ordered by height."""
    yield Fraction(0)
    h = 1
    while True:
        yield Fraction(h)
        yield Fraction(-h)
        others = [Fraction(p, h) for p in range(1, h) if math.gcd(p, h) == 1]
        others += [Fraction(h, q) for q in range(2, h) if math.gcd(h, q) == 1]
        for x in sorted(others, key=lambda v: (v.denominator, v.numerator)):
            yield x
            yield -x
        h += 1


class FieldContext:
    """Shared helpers; subclasses provide ``zero``, ``one`` and the primitive ops."""

    characteristic = 0
    order = None

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero

    def is_one(self, a):
        return a == self.one

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def canonical(self, a):
        return self.convert(a)

    @property
    def is_finite(self):
        return self.order is not None

    def __call__(self, x):
        return self.convert(x)


class Rationals(FieldContext):
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroInversion("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroInversion("division by zero")
        return a / b

    def random(self, rng, height=10):
        num = rng.randint(-height, height)
        return Fraction(num, rng.randint(1, height))

    def candidates(self):
        return rational_candidates()

    def format(self, a):
        return str(a)

    def to_json(self, a):
        return str(a)

    def descriptor(self):
        return "q"


QQ = Rationals()


class PrimeField(FieldContext):
    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise InvalidField(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def convert(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroInversion(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        if isinstance(x, str):
            return self.convert(Fraction(x))
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroInversion("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0 and a == 0:
            raise ZeroInversion("inverse of zero")
        return pow(a, e, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def candidates(self):
        yield 0
        for k in range(1, self.p // 2 + 1):
            yield k
            if self.p - k != k:
                yield self.p - k

    def format(self, a):
        return str(a)

    def to_json(self, a):
        return str(a)

    def descriptor(self):
        return f"fp:{self.p}"


def _format_dense(f, K, var):
    """Human-readable rendering of an ascending coefficient tuple."""
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if K.is_zero(c):
            continue
        cs = K.format(c)
        if i == 0:
            terms.append(cs)
            continue
        mono = var if i == 1 else f"{var}^{i}"
        if K.is_one(c):
            terms.append(mono)
        elif cs == "-1":
            terms.append("-" + mono)
        elif any(ch in cs for ch in "+ ") or ("-" in cs[1:]):
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    out = terms[0]
    for term in terms[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


class Extension(FieldContext):
    """``base[x]/(modulus)`` for a monic squarefree modulus of degree >= 2.

    The modulus need not be irreducible; inverting a residue that shares a
    factor with it raises :class:`ZeroDivisor` carrying that factor.
    """

    def __init__(self, base, modulus, var="x"):
        if isinstance(base, RatFunc):
            raise InvalidField("extensions of a rational function field are not supported")
        modulus = tuple(getattr(modulus, "coeffs", modulus))
        modulus = dense.dup_strip([base.convert(c) for c in modulus], base)
        if len(modulus) < 3:
            raise InvalidField("extension modulus must have degree >= 2")
        if not base.is_one(modulus[-1]):
            raise InvalidField("extension modulus must be monic")
        if len(dense.dup_gcd(modulus, dense.dup_diff(modulus, base), base)) > 1:
            raise InvalidField("extension modulus must be squarefree")
        self.base = base
        self.modulus = modulus
        self.var = var
        self.degree = len(modulus) - 1
        self.characteristic = base.characteristic
        self.order = base.order ** self.degree if base.order else None
        self.zero = ()
        self.one = (base.one,)
        self.gen = (base.zero, base.one)

    def __repr__(self):
        return f"{self.base!r}[{self.var}]/({_format_dense(self.modulus, self.base, self.var)})"

    def __eq__(self, other):
        return (isinstance(other, Extension) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))

    def _reduce(self, f):
        f = dense.dup_strip(f, self.base)
        if len(f) > self.degree:
            f = dense.dup_rem(f, self.modulus, self.base)
        return f

    def convert(self, x):
        if isinstance(x, (tuple, list)):
            return self._reduce([self.base.convert(c) for c in x])
        return dense.dup_strip((self.base.convert(x),), self.base)

    def embed(self, x):
        """Map a base-field payload into this ring."""
        return dense.dup_strip((x,), self.base)

    def add(self, a, b):
        return dense.dup_add(a, b, self.base)

    def sub(self, a, b):
        return dense.dup_sub(a, b, self.base)

    def neg(self, a):
        return dense.dup_neg(a, self.base)

    def mul(self, a, b):
        return self._reduce(dense.dup_mul(a, b, self.base))

    def inv(self, a):
        if not a:
            raise ZeroInversion("inverse of zero")
        s, _, h = dense.dup_gcdex(a, self.modulus, self.base)
        if len(h) > 1:
            raise ZeroDivisor(h)
        return self._reduce(s)

    def random(self, rng):
        return self._reduce([self.base.random(rng) for _ in range(self.degree)])

    def candidates(self):
        """Embedded base candidates first, then residues by increasing degree."""
        if not self.base.is_finite:
            for c in self.base.candidates():
                yield self.embed(c)
            return
        base_elems = list(self.base.candidates())
        nonzero = base_elems[1:]
        for c in base_elems:
            yield self.embed(c)
        for top in range(1, self.degree):
            for lead in nonzero:
                for rest in itertools.product(base_elems, repeat=top):
                    yield tuple(rest) + (lead,)

    def format(self, a):
        return _format_dense(a, self.base, self.var)

    def to_json(self, a):
        return [self.base.to_json(c) for c in a]

    def descriptor(self):
        mod = _format_dense(self.modulus, self.base, self.var).replace(" ", "").replace("*", "")
        return f"{self.base.descriptor()}/{mod}"


class RatFunc(FieldContext):
    """The rational function field ``base(var)``."""

    def __init__(self, base, var="eps"):
        if isinstance(base, RatFunc):
            raise InvalidField("nested rational function fields are not supported")
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.order = None
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))
        self._unit = (base.one,)

    def __repr__(self):
        return f"{self.base!r}({self.var})"

    def __eq__(self, other):
        return isinstance(other, RatFunc) and other.base == self.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def make(self, num, den):
        """Canonical fraction ``num/den`` of ``var``-polynomials."""
        K = self.base
        num = dense.dup_strip([K.convert(c) for c in getattr(num, "coeffs", num)], K)
        den = dense.dup_strip([K.convert(c) for c in getattr(den, "coeffs", den)], K)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        return self._canon(num, den)

    def _canon(self, num, den):
        K = self.base
        if not num:
            return self.zero
        if len(den) > 1:
            g = dense.dup_gcd(num, den, K)
            if len(g) > 1:
                num = dense.dup_quo(num, g, K)
                den = dense.dup_quo(den, g, K)
        lc = den[-1]
        if not K.is_one(lc):
            inv = K.inv(lc)
            num = dense.dup_mul_ground(num, inv, K)
            den = dense.dup_mul_ground(den, inv, K)
        return (num, den)

    def from_poly(self, f):
        """Embed an ascending coefficient tuple over the base field."""
        f = dense.dup_strip(f, self.base)
        return (f, self._unit)

    def convert(self, x):
        if isinstance(x, tuple) and len(x) == 2 and all(isinstance(v, tuple) for v in x):
            return self.make(*x)
        return self.from_poly((self.base.convert(x),))

    def embed(self, x):
        return self.from_poly((x,))

    @property
    def gen(self):
        return ((self.base.zero, self.base.one), self._unit)

    def add(self, a, b):
        K = self.base
        (n1, d1), (n2, d2) = a, b
        if d1 == d2:
            if d1 == self._unit:
                return (dense.dup_add(n1, n2, K), d1)
            return self._canon(dense.dup_add(n1, n2, K), d1)
        num = dense.dup_add(dense.dup_mul(n1, d2, K), dense.dup_mul(n2, d1, K), K)
        return self._canon(num, dense.dup_mul(d1, d2, K))

    def neg(self, a):
        return (dense.dup_neg(a[0], self.base), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        K = self.base
        (n1, d1), (n2, d2) = a, b
        if not n1 or not n2:
            return self.zero
        if d1 == self._unit and d2 == self._unit:
            return (dense.dup_mul(n1, n2, K), d1)
        return self._canon(dense.dup_mul(n1, n2, K), dense.dup_mul(d1, d2, K))

    def inv(self, a):
        if not a[0]:
            raise ZeroInversion("inverse of zero")
        return self._canon(a[1], a[0])

    def is_polynomial(self, a):
        return a[1] == self._unit

    def specialize(self, a, value):
        """Evaluate at ``var = value`` (a base-field payload)."""
        K = self.base
        den = dense.dup_eval(a[1], value, K)
        if K.is_zero(den):
            raise PoleAtSpecialization(f"denominator vanishes at {self.var} = {K.format(value)}")
        return K.div(dense.dup_eval(a[0], value, K), den)

    def random(self, rng, degree=2):
        K = self.base
        num = [K.random(rng) for _ in range(degree + 1)]
        den = [K.random(rng) for _ in range(degree)] + [K.one]
        return self.make(num, den)

    def candidates(self):
        for c in self.base.candidates():
            yield self.embed(c)

    def format(self, a):
        num = _format_dense(a[0], self.base, self.var)
        if a[1] == self._unit:
            return num
        return f"({num})/({_format_dense(a[1], self.base, self.var)})"

    def to_json(self, a):
        return {"num": [self.base.to_json(c) for c in a[0]],
                "den": [self.base.to_json(c) for c in a[1]]}

    def descriptor(self):
        return f"{self.base.descriptor()}({self.var})"


def ratfunc_make(num, den, base=QQ):
    return RatFunc(base).make(num, den)


def specialize_eps(ctx, x, value):
    return ctx.specialize(x, value)
