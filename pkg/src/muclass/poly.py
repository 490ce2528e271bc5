"""Univariate polynomials over an exact field, plus root finding.

>>> f = Poly.from_ints([1, -2, 1])      # (t - 1)^2
>>> f.degree
2
>>> find_root(f).value
Fraction(1, 1)
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import dense
from .errors import (ConstantPolynomial, NoRootInPolicy, NotARoot,
                     ZeroDivisor)
from .fields import QQ, Extension, FieldContext, RatFunc, _format_dense

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial in ``t`` with coefficients in ``ctx``."""

    __slots__ = ("ctx", "coeffs", "_hash")

    def __init__(self, ctx, coeffs=(), *, canonical=False):
        self.ctx = ctx
        if not canonical:
            coeffs = dense.dup_strip([ctx.convert(c) for c in coeffs], ctx)
        self.coeffs = tuple(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, ctx, coeffs):
        return cls(ctx, coeffs, canonical=True)

    @classmethod
    def from_payloads(cls, ctx, coeffs):
        """Wrap payloads already canonical in ``ctx`` (trailing zeros allowed)."""
        return cls._raw(ctx, dense.dup_strip(coeffs, ctx))

    @classmethod
    def from_ints(cls, coeffs, ctx=QQ):
        return cls(ctx, coeffs)

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, ())

    @classmethod
    def const(cls, ctx, c):
        return cls(ctx, (c,))

    @classmethod
    def gen(cls, ctx):
        return cls._raw(ctx, (ctx.zero, ctx.one))

    @classmethod
    def monomial(cls, ctx, c, k):
        return cls(ctx, (ctx.zero,) * k + (ctx.convert(c),))

    @property
    def degree(self):
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ctx.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly(self.ctx, (other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.coeffs))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise TypeError(f"context mismatch: {self.ctx!r} vs {other.ctx!r}")
            return other
        return Poly(self.ctx, (other,))

    def __add__(self, other):
        other = self._coerce(other)
        return Poly._raw(self.ctx, dense.dup_add(self.coeffs, other.coeffs, self.ctx))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ctx, dense.dup_neg(self.coeffs, self.ctx))

    def __sub__(self, other):
        other = self._coerce(other)
        return Poly._raw(self.ctx, dense.dup_sub(self.coeffs, other.coeffs, self.ctx))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = self._coerce(other)
            return Poly._raw(self.ctx, dense.dup_mul(self.coeffs, other.coeffs, self.ctx))
        return self.scale(self.ctx.convert(other))

    __rmul__ = __mul__

    def __pow__(self, e):
        return Poly._raw(self.ctx, dense.dup_pow(self.coeffs, e, self.ctx))

    def __divmod__(self, other):
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, c):
        """Multiply by a field payload."""
        return Poly._raw(self.ctx, dense.dup_mul_ground(self.coeffs, c, self.ctx))

    def shift(self, k):
        """Multiply by ``t**k``."""
        return Poly._raw(self.ctx, dense.dup_mul_xk(self.coeffs, k, self.ctx))

    def monic(self):
        return Poly._raw(self.ctx, dense.dup_monic(self.coeffs, self.ctx))

    def diff(self):
        return Poly._raw(self.ctx, dense.dup_diff(self.coeffs, self.ctx))

    def __call__(self, x):
        return dense.dup_eval(self.coeffs, self.ctx.convert(x), self.ctx)

    def eval(self, x):
        """Evaluate at a payload of ``self.ctx``."""
        return dense.dup_eval(self.coeffs, x, self.ctx)

    def map_coeffs(self, fn, ctx):
        """Apply ``fn`` to every coefficient, landing in ``ctx``."""
        return Poly(ctx, [fn(c) for c in self.coeffs])

    def embed(self, ctx):
        """Lift into an extension or rational function field of ``self.ctx``."""
        if ctx == self.ctx:
            return self
        return Poly._raw(ctx, tuple(ctx.embed(c) for c in self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return _format_dense(self.coeffs, self.ctx, "t")


def poly_divmod(f, g):
    q, r = dense.dup_divmod(f.coeffs, g.coeffs, f.ctx)
    return Poly._raw(f.ctx, q), Poly._raw(f.ctx, r)


def gcd(f, g):
    """Monic gcd; ``gcd(0, 0) == 0``."""
    return Poly._raw(f.ctx, dense.dup_gcd(f.coeffs, g.coeffs, f.ctx))


def gcd_many(*polys):
    g = polys[0]
    for f in polys[1:]:
        g = gcd(g, f)
    return g


def squarefree_part(f):
    """Monic product of the distinct irreducible factors of ``f``."""
    K = f.ctx
    return Poly._raw(K, _sqf_part(dense.dup_monic(f.coeffs, K), K))


def _pth_root(f, K):
    """``g`` with ``g**p == f`` for ``f`` a polynomial in ``x**p`` over a finite field."""
    p = K.characteristic
    e = K.order // p
    return tuple(K.pow(f[i], e) for i in range(0, len(f), p))


def _sqf_part(f, K):
    if len(f) <= 1:
        return f
    df = dense.dup_diff(f, K)
    if not df:
        # f(t) = g(t^p): perfect p-th power over a finite field
        return _sqf_part(dense.dup_monic(_pth_root(f, K), K), K)
    g = dense.dup_gcd(f, df, K)
    core = dense.dup_quo(f, g, K)
    if K.characteristic == 0 or len(g) <= 1:
        return dense.dup_monic(core, K)
    # factors of multiplicity divisible by p survive only in g
    rest = g
    while True:
        h = dense.dup_gcd(rest, core, K)
        if len(h) <= 1:
            break
        rest = dense.dup_quo(rest, h, K)
    if len(rest) <= 1:
        return dense.dup_monic(core, K)
    extra = _sqf_part(dense.dup_monic(rest, K), K)
    full = dense.dup_mul(core, extra, K)
    return dense.dup_monic(dense.dup_quo(full, dense.dup_gcd(core, extra, K), K), K)


@dataclass(frozen=True)
class RootPolicy:
    """How roots and admissible points are searched for.

    ``candidates`` pins an explicit ordered list of base-field candidate
    values (payloads or anything the context converts); ``budget`` caps how
    many enumerated candidates are tried.
    """

    allow_extension: bool = False
    candidates: Optional[Sequence] = None
    budget: int = 200
    seed: int = 0


BASE_ONLY = RootPolicy()


@dataclass(frozen=True)
class RootHandle:
    value: object
    context: FieldContext
    minimal_factor: Poly = field(compare=False)

    def __str__(self):
        return self.context.format(self.value)


def _lift_into(f, ctx):
    """Coerce ``f`` into ``ctx`` (equal, or an extension tower above f.ctx)."""
    if f.ctx == ctx:
        return f
    if isinstance(ctx, Extension):
        return _lift_into(f, ctx.base).embed(ctx)
    raise TypeError(f"cannot lift {f.ctx!r} into {ctx!r}")


def divide_by_linear(f, alpha):
    """Synthetic division of ``f`` by ``t - alpha`` in the root's witness context."""
    K = alpha.context
    f = _lift_into(f, K)
    a = alpha.value
    out = []
    acc = K.zero
    for c in reversed(f.coeffs):
        acc = K.add(K.mul(acc, a), c)
        out.append(acc)
    remainder = out.pop() if out else K.zero
    if not K.is_zero(remainder):
        raise NotARoot(f"{K.format(a)} is not a root of {f}")
    return Poly._raw(K, tuple(reversed(out)))


def _rational_root_candidates(f):
    """Candidates from the rational root test, in the global height order."""
    coeffs = [Fraction(c) for c in f.coeffs]
    k = 0
    while coeffs[k] == 0:
        k += 1
    zero = [Fraction(0)] if k else []
    coeffs = coeffs[k:]
    if len(coeffs) == 1:
        return zero
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _igcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    trailing, leading = abs(ints[0]), abs(ints[-1])
    nums = _divisors(trailing)
    dens = _divisors(leading)
    cands = {Fraction(s * r, d) for r in nums for d in dens for s in (1, -1)}
    return zero + sorted(cands, key=_height_key)


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _height_key(x):
    h = max(abs(x.numerator), x.denominator)
    # match rational_candidates: integers first, then by denominator
    return (h, x.denominator != 1, x.denominator, abs(x.numerator), x < 0)


def _root_sort_key(K):
    order = {}
    if K.is_finite and K.order <= 10_000:
        order = {c: i for i, c in enumerate(K.candidates())}
    return lambda v: order.get(v, len(order))


def _ddf_first(f, K):
    """Smallest ``d`` and the product of the degree-``d`` irreducible factors of monic squarefree ``f``."""
    q = K.order
    x = (K.zero, K.one)
    h = x
    d = 0
    f = tuple(f)
    while len(f) > 1:
        d += 1
        h = dense.dup_powmod(h, q, f, K)
        g = dense.dup_gcd(f, dense.dup_sub(h, x, K), K)
        if len(g) > 1:
            return d, g
        if 2 * d > len(f) - 1:
            return len(f) - 1, f
    raise ConstantPolynomial("no factors")


def _edf(f, d, K, rng):
    """Cantor-Zassenhaus split of ``f`` (product of degree-``d`` irreducibles) into factors."""
    n = len(f) - 1
    if n <= d:
        return [f]
    q = K.order
    while True:
        r = dense.dup_strip([K.random(rng) for _ in range(n)], K)
        if len(r) <= 1:
            continue
        if K.characteristic == 2:
            k = (q.bit_length() - 1) * d
            acc = r
            s = r
            for _ in range(k - 1):
                s = dense.dup_rem(dense.dup_mul(s, s, K), f, K)
                acc = dense.dup_add(acc, s, K)
            g = dense.dup_gcd(f, acc, K)
        else:
            e = (q ** d - 1) // 2
            g = dense.dup_gcd(f, dense.dup_sub(dense.dup_powmod(r, e, f, K), (K.one,), K), K)
        if 1 < len(g) < len(f):
            other = dense.dup_monic(dense.dup_quo(f, g, K), K)
            return _edf(g, d, K, rng) + _edf(other, d, K, rng)


def finite_field_roots(f, rng=None):
    """All base-field roots of ``f`` over a finite field, in candidate order."""
    K = f.ctx
    rng = rng or random.Random(0)
    s = _sqf_part(dense.dup_monic(f.coeffs, K), K)
    if len(s) <= 1:
        return []
    x = (K.zero, K.one)
    linear = dense.dup_gcd(s, dense.dup_sub(dense.dup_powmod(x, K.order, s, K), x, K), K)
    if len(linear) <= 1:
        return []
    roots = [K.neg(g[0]) for g in _edf(linear, 1, K, rng)]
    return sorted(roots, key=_root_sort_key(K))


def find_irreducible_factor(f, rng=None):
    """One monic irreducible factor of smallest degree (finite fields only)."""
    K = f.ctx
    rng = rng or random.Random(0)
    s = _sqf_part(dense.dup_monic(f.coeffs, K), K)
    if len(s) <= 1:
        raise ConstantPolynomial("constant polynomial has no factors")
    d, g = _ddf_first(s, K)
    factors = _edf(g, d, K, rng)
    return Poly._raw(K, min(factors))


def irreducible_poly(K, degree):
    """First monic irreducible of the given degree in the candidate enumeration."""
    import itertools
    elems = list(itertools.islice(K.candidates(), K.order))
    for rest in itertools.product(elems, repeat=degree):
        f = tuple(reversed(rest)) + (K.one,)
        if not f or K.is_zero(f[0]):
            continue
        s = _sqf_part(f, K)
        if s != f:
            continue
        d, _ = _ddf_first(f, K)
        if d == degree:
            return Poly._raw(K, f)
    raise ConstantPolynomial(f"no irreducible of degree {degree}")  # pragma: no cover


def find_root(f, policy=BASE_ONLY):
    """A certified root of ``f``.

    Over Q only rational roots are found. Over finite fields the root lies
    in the base field when one exists; otherwise, if the policy allows, in
    the extension defined by a smallest-degree irreducible factor.
    """
    K = f.ctx
    if f.degree < 1:
        raise ConstantPolynomial(f"{f} has no roots")
    if policy.candidates is not None:
        for c in policy.candidates:
            v = K.convert(c)
            if K.is_zero(f.eval(v)):
                return RootHandle(v, K, Poly._raw(K, (K.neg(v), K.one)))
        raise NoRootInPolicy(f"no listed candidate is a root of {f}")
    if K == QQ:
        for v in _rational_root_candidates(f):
            if f.eval(v) == 0:
                return RootHandle(v, K, Poly._raw(K, (-v, K.one)))
        raise NoRootInPolicy(f"{f} has no rational root")
    if K.is_finite:
        rng = random.Random(policy.seed)
        try:
            roots = finite_field_roots(f, rng)
        except ZeroDivisor:
            roots = []
        if roots:
            v = roots[0]
            return RootHandle(v, K, Poly._raw(K, (K.neg(v), K.one)))
        if not policy.allow_extension:
            raise NoRootInPolicy(f"{f} has no root in {K!r}")
        g = find_irreducible_factor(f, rng)
        L = Extension(K, g.coeffs)
        return RootHandle(L.gen, L, g)
    if isinstance(K, RatFunc):
        raise NoRootInPolicy("root finding over a rational function field is not supported")
    for i, v in enumerate(K.candidates()):
        if i >= policy.budget:
            break
        if K.is_zero(f.eval(v)):
            return RootHandle(v, K, Poly._raw(K, (K.neg(v), K.one)))
    raise NoRootInPolicy(f"no root of {f} among {policy.budget} candidates")
