"""Syzygies of a parametrization, its class and its mu-basis.

A syzygy of ``(a, b, c)`` is a polynomial triple ``(A, B, C)`` with
``A*a + B*b + C*c == 0``. The degree-``d`` syzygies form the kernel of a
``(n + d + 1) x 3(d + 1)`` coefficient matrix, which is what every routine
here works with. Kernel vectors are laid out coordinate-major: entry
``j*(d+1) + i`` is the coefficient of ``t**i`` in coordinate ``j``.
"""

import logging
from dataclasses import dataclass
from typing import List

from . import dense, linalg
from .errors import (InternalInconsistency, InvalidTriple, NoDecomposition,
                     NotASyzygy)
from .fields import RatFunc
from .poly import Poly, gcd_many

log = logging.getLogger(__name__)


class ParamTriple:
    """Parametrization ``x = a/c, y = b/c`` of a rational planar curve.

    With ``check=True`` (the default) the triple must be nonzero, coprime
    and of degree ``n >= 1``. ``c == 0`` is allowed but logged.
    """

    __slots__ = ("a", "b", "c", "ctx")

    def __init__(self, a, b, c, *, check=True):
        if not (a.ctx == b.ctx == c.ctx):
            raise InvalidTriple("a, b, c must share a coefficient field")
        self.a, self.b, self.c = a, b, c
        self.ctx = a.ctx
        if not check:
            return
        if not (a or b or c):
            raise InvalidTriple("(a, b, c) must be nonzero")
        if self.n < 1:
            raise InvalidTriple("degree n must be at least 1")
        if gcd_many(a, b, c).degree > 0:
            raise InvalidTriple(f"gcd(a, b, c) = {gcd_many(a, b, c)} is not 1")
        if not c:
            log.warning("c = 0: triple is not a parametrization in P_n")

    @classmethod
    def from_coeffs(cls, a, b, c, ctx, **kw):
        return cls(Poly(ctx, a), Poly(ctx, b), Poly(ctx, c), **kw)

    @property
    def polys(self):
        return (self.a, self.b, self.c)

    @property
    def n(self):
        return max(max(f.degree for f in self.polys), 0)

    def is_coprime(self):
        return gcd_many(*self.polys).degree <= 0

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        return isinstance(other, ParamTriple) and self.polys == other.polys

    def __hash__(self):
        return hash(self.polys)

    def __repr__(self):
        return f"ParamTriple({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class SyzygyVec:
    A: Poly
    B: Poly
    C: Poly

    @property
    def ctx(self):
        return self.A.ctx

    @property
    def coords(self):
        return (self.A, self.B, self.C)

    @property
    def degree(self):
        return max(f.degree for f in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other):
        return SyzygyVec(self.A + other.A, self.B + other.B, self.C + other.C)

    def __sub__(self, other):
        return SyzygyVec(self.A - other.A, self.B - other.B, self.C - other.C)

    def __neg__(self):
        return SyzygyVec(-self.A, -self.B, -self.C)

    def scale(self, c):
        return SyzygyVec(self.A.scale(c), self.B.scale(c), self.C.scale(c))

    def mul(self, h):
        """Multiply every coordinate by the polynomial ``h``."""
        return SyzygyVec(self.A * h, self.B * h, self.C * h)

    def shift(self, k):
        return SyzygyVec(self.A.shift(k), self.B.shift(k), self.C.shift(k))

    def is_zero(self):
        return not (self.A or self.B or self.C)

    def dot(self, triple):
        return self.A * triple.a + self.B * triple.b + self.C * triple.c

    def annihilates(self, triple):
        return not self.dot(triple)

    def cross(self, other):
        """``(p_y q_w - p_w q_y, p_w q_x - p_x q_w, p_x q_y - p_y q_x)``."""
        px, py, pw = self.coords
        qx, qy, qw = other.coords
        return (py * qw - pw * qy, pw * qx - px * qw, px * qy - py * qx)

    def evaluate(self, x):
        return tuple(f.eval(x) for f in self.coords)

    def __str__(self):
        return f"({self.A}, {self.B}, {self.C})"


@dataclass(frozen=True)
class MuBasis:
    p: SyzygyVec
    q: SyzygyVec
    mu: int
    n: int
    triple: ParamTriple


def _coefficient_matrix(polys, d, zero, nrows):
    ncols = 3 * (d + 1)
    M = [[zero] * ncols for _ in range(nrows)]
    for j, f in enumerate(polys):
        for i in range(d + 1):
            col = j * (d + 1) + i
            for k, c in enumerate(f):
                M[i + k][col] = c
    return M


def coefficient_matrix(triple, d):
    """Matrix of ``(A, B, C) -> A a + B b + C c`` on triples of degree <= d."""
    return _coefficient_matrix([f.coeffs for f in triple], d, triple.ctx.zero, triple.n + d + 1)


def to_vector(s, d):
    v = []
    for f in s.coords:
        if f.degree > d:
            raise ValueError(f"syzygy degree {s.degree} exceeds {d}")
        v.extend(f[i] for i in range(d + 1))
    return v


def from_vector(v, d, K):
    m = d + 1
    return SyzygyVec(*(Poly.from_payloads(K, v[j * m:(j + 1) * m]) for j in range(3)))


def syzygy_space(triple, d) -> List[SyzygyVec]:
    """Echelon basis of the syzygies of degree <= d."""
    if d < 0:
        return []
    K = triple.ctx
    M = coefficient_matrix(triple, d)
    return [from_vector(v, d, K) for v in linalg.nullspace(M, K, 3 * (d + 1))]


def kernel_dim(triple, d):
    K = triple.ctx
    return 3 * (d + 1) - linalg.rank(coefficient_matrix(triple, d), K)


def mu(triple):
    """Class of the triple: least degree of a nonzero syzygy."""
    d = 0
    while kernel_dim(triple, d) == 0:
        d += 1
    return d


def _polynomial_coeffs(triple):
    """The triple as ``eps``-polynomial coefficient tuples, denominators cleared per coordinate."""
    K = triple.ctx
    if not isinstance(K, RatFunc):
        return [[(c,) if not K.is_zero(c) else () for c in f.coeffs] for f in triple], K
    B = K.base
    out = []
    for f in triple:
        den = (B.one,)
        for _, dc in f.coeffs:
            den = dense.dup_quo(dense.dup_mul(den, dc, B), dense.dup_gcd(den, dc, B), B)
        out.append([dense.dup_quo(dense.dup_mul(nc, den, B), dc, B) for nc, dc in f.coeffs])
    return out, B


def kernel_dim_fraction_free(triple, d):
    polys, B = _polynomial_coeffs(triple)
    M = _coefficient_matrix(polys, d, (), triple.n + d + 1)
    return 3 * (d + 1) - linalg.bareiss_rank(M, B)


def mu_fraction_free(triple):
    """Class over ``K(eps)`` by fraction-free elimination on ``K[eps]`` entries."""
    d = 0
    while kernel_dim_fraction_free(triple, d) == 0:
        d += 1
    return d


def _canonical_scale(s):
    """Scale so the leading coefficient of the first top-degree coordinate is 1."""
    K = s.ctx
    top = s.degree
    for f in s.coords:
        if f.degree == top:
            return s.scale(K.inv(f.lc))
    raise InternalInconsistency("zero syzygy")


def _cross_multiple(p, v, triple):
    """``kappa`` with ``p x v == kappa (a, b, c)``, or None if not such a multiple."""
    K = triple.ctx
    cross = p.cross(v)
    kappa = None
    for g, f in zip(cross, triple):
        if f:
            kappa = K.div(g.lc, f.lc) if g else K.zero
            break
    if kappa is None:
        return None
    for g, f in zip(cross, triple):
        if g != f.scale(kappa):
            return None
    return kappa


def reduce_mod_shifts(q, p, count, d):
    """Canonical representative of ``q`` modulo ``span{t^i p : i < count}``."""
    K = q.ctx
    rows = [to_vector(p.shift(i), d) for i in range(count)]
    R, pivots = linalg.rref(rows, K)
    v = to_vector(q, d)
    for row, pc in zip(R, pivots):
        f = v[pc]
        if not K.is_zero(f):
            v = [K.sub(x, K.mul(f, y)) for x, y in zip(v, row)]
    return from_vector(v, d, K)


def mu_basis(triple) -> MuBasis:
    """The pair ``(p, q)`` with ``p x q == (a, b, c)`` exactly.

    ``p`` spans the degree-mu syzygies (first echelon element when mu = n/2),
    scaled per :func:`_canonical_scale`; ``q`` is reduced modulo the
    shifts of ``p`` and scaled so the cross product has constant 1.
    """
    K = triple.ctx
    n = triple.n
    m = mu(triple)
    low = syzygy_space(triple, m)
    p = _canonical_scale(low[0])
    D = n - m
    candidates = low[1:] if D == m else syzygy_space(triple, D)
    for v in candidates:
        kappa = _cross_multiple(p, v, triple)
        if kappa is not None and not K.is_zero(kappa):
            break
    else:
        raise InternalInconsistency("no degree n - mu syzygy completes p to a basis")
    q = reduce_mod_shifts(v, p, D - m + 1, D).scale(K.inv(kappa))
    return MuBasis(p=p, q=q, mu=m, n=n, triple=triple)


def decompose(basis, s):
    """Unique ``(h1, h2)`` with ``s == h1 p + h2 q``."""
    triple = basis.triple
    K = triple.ctx
    if s.dot(triple):
        raise NotASyzygy(f"{s} is not a syzygy of {triple}")
    if s.is_zero():
        return Poly.zero(K), Poly.zero(K)
    D = s.degree
    k1 = D - basis.mu
    k2 = D + basis.mu - basis.n
    cols = [to_vector(basis.p.shift(i), D) for i in range(k1 + 1)]
    cols += [to_vector(basis.q.shift(j), D) for j in range(k2 + 1)]
    if not cols:
        raise NoDecomposition(f"syzygy of degree {D} below mu = {basis.mu}")
    M = [list(row) for row in zip(*cols)]
    x = linalg.solve(M, to_vector(s, D), K)
    if x is None:
        raise NoDecomposition(f"{s} is not in the span of the mu-basis")
    h1 = Poly.from_payloads(K, x[:k1 + 1])
    h2 = Poly.from_payloads(K, x[k1 + 1:])
    if basis.p.mul(h1) + basis.q.mul(h2) != s:
        raise NoDecomposition("recombination mismatch")
    return h1, h2


def verify_identity(basis, triple=None):
    """Per-check results for the cross-product identity and degree pattern."""
    triple = triple or basis.triple
    p, q = basis.p, basis.q
    ca, cb, cc = p.cross(q)
    return {
        "identity_a": ca == triple.a,
        "identity_b": cb == triple.b,
        "identity_c": cc == triple.c,
        "deg_p": p.degree == basis.mu,
        "deg_q": q.degree == basis.n - basis.mu,
        "gcd_p": gcd_many(*p.coords).degree == 0,
    }
