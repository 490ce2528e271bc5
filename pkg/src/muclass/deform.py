"""Deforming a class-mu parametrization into a family of class mu + 1.

Given ``(a, b, c)`` of degree ``n`` and class ``mu < n // 2`` the pipeline

1. computes the mu-basis ``(p, q)`` and reorders coordinates so that
   ``p_x`` is nonzero;
2. picks a shear ``lambda`` and a root ``alpha`` of ``a + lambda b`` at which
   ``p_y - lambda p_x`` and ``p_w`` do not both vanish;
3. replaces ``a + lambda b`` by ``(a + lambda b)(t - alpha + eps)/(t - alpha)``;
4. undoes the shear, giving a family over ``K[eps][t]`` that specializes to
   ``(a, b, c)`` at ``eps = 0`` and has class ``mu + 1`` over ``K(eps)``.
"""

import itertools
import random
from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from .errors import (DegenerateShear, InternalInconsistency, MuMaximal,
                     NoAdmissiblePick, NoRootInPolicy, NotARoot)
from .fields import Extension, RatFunc
from .poly import (BASE_ONLY, Poly, RootHandle, _lift_into, divide_by_linear,
                   find_root, gcd, gcd_many, irreducible_poly)
from .syzygy import (MuBasis, ParamTriple, SyzygyVec, mu, mu_basis,
                     mu_fraction_free)

IDENTITY = (0, 1, 2)
# nu values tried for the pre-shear a -> a + nu c when the lambda search fails
PRE_SHEAR_BUDGET = 8


@dataclass(frozen=True)
class AdmissiblePick:
    lam: object
    alpha: RootHandle
    sheared_triple: ParamTriple
    sheared_basis: MuBasis
    path: str = "alpha-first"

    @property
    def ctx(self):
        return self.alpha.context


@dataclass(frozen=True)
class ApproxSeq:
    """Family ``(a_eps, b_eps, c_eps)``: polynomials in ``t`` over ``K(eps)``
    whose coefficients are all polynomial in ``eps``."""

    a_eps: Poly
    b_eps: Poly
    c_eps: Poly
    origin: ParamTriple
    target_mu: int
    pick: Optional[AdmissiblePick] = None
    transported_by: Optional[object] = None
    witness: Optional[SyzygyVec] = None
    permutation: Tuple[int, int, int] = IDENTITY
    pre_shear: Optional[object] = None

    @property
    def ctx(self):
        return self.a_eps.ctx

    @property
    def polys(self):
        return (self.a_eps, self.b_eps, self.c_eps)

    @property
    def triple(self):
        return ParamTriple(*self.polys, check=False)

    def is_polynomial_in_eps(self):
        R = self.ctx
        return all(R.is_polynomial(c) for f in self.polys for c in f.coeffs)

    def eps_parts(self, f):
        """Split ``f`` into its coefficients of ``eps**0, eps**1, ...`` (polys over K)."""
        R = self.ctx
        K = R.base
        top = max((len(c[0]) for c in f.coeffs), default=0)
        return [Poly.from_payloads(K, [c[0][k] if k < len(c[0]) else K.zero for c in f.coeffs])
                for k in range(top)]

    def specialize(self, value):
        return specialize_triple(self.triple, value)


def specialize_triple(triple, value):
    R = triple.ctx
    return ParamTriple(*(Poly.from_payloads(R.base, [R.specialize(c, value) for c in f.coeffs])
                         for f in triple), check=False)


def embed_triple(triple, ctx):
    return ParamTriple(*(_lift_into(f, ctx) for f in triple), check=False)


def embed_syzygy(s, ctx):
    return SyzygyVec(*(_lift_into(f, ctx) for f in s.coords))


def embed_basis(basis, ctx):
    if basis.p.ctx == ctx:
        return basis
    return MuBasis(embed_syzygy(basis.p, ctx), embed_syzygy(basis.q, ctx),
                   basis.mu, basis.n, embed_triple(basis.triple, ctx))


def shear(triple, lam):
    """``(a + lam b, b, c)``."""
    K = triple.ctx
    lam = K.convert(lam)
    a = triple.a + triple.b.scale(lam)
    if not a:
        raise DegenerateShear("a + lambda b vanishes identically")
    return ParamTriple(a, triple.b, triple.c, check=False)


def shear_syzygy(s, lam):
    """Image of a syzygy of ``(a, b, c)`` under the shear: ``(A, B - lam A, C)``."""
    return SyzygyVec(s.A, s.B - s.A.scale(lam), s.C)


def shear_mubasis(basis, lam):
    """mu-basis of ``shear(T, lam)`` from one of ``T``: ``p_y -> p_y - lam p_x``, same for ``q``."""
    K = basis.triple.ctx
    lam = K.convert(lam)
    return MuBasis(shear_syzygy(basis.p, lam), shear_syzygy(basis.q, lam),
                   basis.mu, basis.n, shear(basis.triple, lam))


def is_admissible(basis, lam, alpha):
    """Not both ``p_y - lam p_x`` and ``p_w`` vanish at ``alpha`` (all in one context)."""
    L = basis.p.ctx
    px, py, pw = basis.p.evaluate(alpha)
    return not (L.is_zero(L.sub(py, L.mul(lam, px))) and L.is_zero(pw))


def make_pick(triple, lam, alpha, basis=None, *, check=True, path="manual"):
    """Build a pick from explicit ``lam`` and ``alpha`` in ``triple.ctx``.

    ``check=False`` skips the admissibility test, so families built on a
    common root of ``p_y`` and ``p_w`` can be studied.
    """
    K = triple.ctx
    basis = basis or mu_basis(triple)
    lam = K.convert(lam)
    alpha = K.convert(alpha)
    sheared = shear(triple, lam)
    if not K.is_zero(sheared.a.eval(alpha)):
        raise NotARoot(f"{K.format(alpha)} is not a root of a + lambda b")
    if check and not is_admissible(basis, lam, alpha):
        raise NoAdmissiblePick("p_y - lambda p_x and p_w both vanish at alpha")
    handle = RootHandle(alpha, K, Poly.from_payloads(K, (K.neg(alpha), K.one)))
    return AdmissiblePick(lam, handle, sheared, shear_mubasis(basis, lam), path)


def _strip_common(a, g):
    h = a
    while True:
        c = gcd(h, g)
        if c.degree <= 0:
            return h
        h = h // c


def _alpha_first(triple, basis, candidates, lam_budget=16):
    """Walk ``alpha``; ``lambda = -a(alpha)/b(alpha)``, or any ``lambda`` when
    ``alpha`` is a common root of ``a`` and ``b``."""
    K = triple.ctx
    a, b = triple.a, triple.b
    px, py, pw = basis.p.coords
    for alpha in candidates:
        a_val, b_val = a.eval(alpha), b.eval(alpha)
        if not K.is_zero(b_val):
            lams = [K.neg(K.div(a_val, b_val))]
        elif K.is_zero(a_val):
            lams = itertools.islice(K.candidates(), lam_budget)
        else:
            continue
        px_val, py_val, pw_val = px.eval(alpha), py.eval(alpha), pw.eval(alpha)
        for lam in lams:
            sheared = a + b.scale(lam)
            if sheared.degree < 1:
                continue
            if K.is_zero(K.sub(py_val, K.mul(lam, px_val))) and K.is_zero(pw_val):
                continue
            handle = RootHandle(alpha, K, Poly.from_payloads(K, (K.neg(alpha), K.one)))
            return AdmissiblePick(lam, handle, ParamTriple(sheared, b, triple.c, check=False),
                                  shear_mubasis(basis, lam))
    return None


def find_admissible(triple, basis=None, policy=BASE_ONLY, max_extension_degree=4):
    """Shear and root making the deformation raise the class.

    First tries ``lambda = 0`` with a root of ``a`` that is not a common root
    of ``p_y`` and ``p_w``; then walks base-field candidates ``alpha``
    setting ``lambda = -a(alpha)/b(alpha)``; finally, over finite fields
    and if the policy allows, repeats the walk in extension fields.
    """
    K = triple.ctx
    basis = basis or mu_basis(triple)
    _, py, pw = basis.p.coords

    h = _strip_common(triple.a, gcd(py, pw))
    if h.degree >= 1:
        try:
            root = find_root(h, policy)
        except NoRootInPolicy:
            root = None
        if root is not None:
            L = root.context
            return AdmissiblePick(L.zero, root, embed_triple(triple, L),
                                  embed_basis(basis, L), "lambda0")

    if policy.candidates is not None:
        candidates = [K.convert(c) for c in policy.candidates]
    else:
        candidates = itertools.islice(K.candidates(), policy.budget)
    pick = _alpha_first(triple, basis, candidates)
    if pick is not None:
        return pick

    if K.is_finite and policy.allow_extension:
        for d in range(2, max_extension_degree + 1):
            L = Extension(K, irreducible_poly(K, d).coeffs)
            cands = itertools.islice(
                (v for v in L.candidates() if len(v) > 1), policy.budget)
            pick = _alpha_first(embed_triple(triple, L), embed_basis(basis, L), cands)
            if pick is not None:
                return AdmissiblePick(pick.lam, pick.alpha, pick.sheared_triple,
                                      pick.sheared_basis, "extension")
    raise NoAdmissiblePick("no admissible (lambda, alpha) within the search budget")


def approx_sequence(pick):
    """``a_eps = (a + lam b) + eps * (a + lam b)/(t - alpha)``, ``b_eps = b``, ``c_eps = c``."""
    L = pick.ctx
    R = RatFunc(L)
    sheared = pick.sheared_triple
    quotient = divide_by_linear(sheared.a, pick.alpha)
    eps = Poly.const(R, R.gen)
    a_eps = sheared.a.embed(R) + quotient.embed(R) * eps
    px, py, pw = (f.embed(R) for f in pick.sheared_basis.p.coords)
    t_minus_alpha = Poly.from_payloads(R, (R.embed(L.neg(pick.alpha.value)), R.one))
    witness = SyzygyVec(px * t_minus_alpha, py * (t_minus_alpha + eps), pw * (t_minus_alpha + eps))
    return ApproxSeq(a_eps, sheared.b.embed(R), sheared.c.embed(R), origin=sheared,
                     target_mu=pick.sheared_basis.mu + 1, pick=pick, witness=witness)


def transport(seq, lam):
    """Carry a family for ``(a + lam b, b, c)`` back to ``(a, b, c)``."""
    R = seq.ctx
    L = R.base
    lam = L.convert(lam)
    if L.is_zero(lam):
        return seq
    lam_r = R.embed(lam)
    origin = seq.origin
    origin = ParamTriple(origin.a - origin.b.scale(lam), origin.b, origin.c, check=False)
    witness = None
    if seq.witness is not None:
        w = seq.witness
        witness = SyzygyVec(w.A, w.B + w.A.scale(lam_r), w.C)
    return replace(seq, a_eps=seq.a_eps - seq.b_eps.scale(lam_r), origin=origin,
                   transported_by=lam, witness=witness)


def _permute(items, perm):
    return tuple(items[i] for i in perm)


def _inverse(perm):
    inv = [0, 0, 0]
    for k, i in enumerate(perm):
        inv[i] = k
    return tuple(inv)


def _sign(perm):
    inversions = sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3))
    return -1 if inversions % 2 else 1


def permute(seq, perm):
    """Reorder the coordinates of a family: coordinate ``k`` becomes old coordinate ``perm[k]``."""
    if perm == IDENTITY:
        return seq
    a, b, c = _permute(seq.polys, perm)
    origin = ParamTriple(*_permute(seq.origin.polys, perm), check=False)
    witness = None
    if seq.witness is not None:
        witness = SyzygyVec(*_permute(seq.witness.coords, perm))
    return replace(seq, a_eps=a, b_eps=b, c_eps=c, origin=origin, witness=witness,
                   permutation=perm)


def permute_basis(basis, perm):
    """mu-basis of the permuted triple; odd permutations flip the sign of ``q``."""
    work = ParamTriple(*_permute(basis.triple.polys, perm), check=False)
    p = SyzygyVec(*_permute(basis.p.coords, perm))
    q = SyzygyVec(*_permute(basis.q.coords, perm))
    return MuBasis(p, q if _sign(perm) > 0 else -q, basis.mu, basis.n, work)


def pre_shear_basis(basis, nu):
    """mu-basis of ``(a + nu c, b, c)``: ``p_w -> p_w - nu p_x``, same for ``q``."""
    K = basis.triple.ctx
    T = basis.triple
    work = ParamTriple(T.a + T.c.scale(nu), T.b, T.c, check=False)

    def move(s):
        return SyzygyVec(s.A, s.B, s.C - s.A.scale(nu))
    return MuBasis(move(basis.p), move(basis.q), basis.mu, basis.n, work)


def undo_pre_shear(seq, nu):
    """Carry a family for ``(a + nu c, b, c)`` back to ``(a, b, c)``."""
    nu_r = seq.ctx.embed(nu)
    o = seq.origin
    witness = None
    if seq.witness is not None:
        w = seq.witness
        witness = SyzygyVec(w.A, w.B, w.C + w.A.scale(nu_r))
    return replace(seq, a_eps=seq.a_eps - seq.c_eps.scale(nu_r),
                   origin=ParamTriple(o.a - o.c.scale(nu), o.b, o.c, check=False),
                   witness=witness, pre_shear=nu)


def choose_permutation(triple, basis):
    """First coordinate order (identity preferred) in which the deformed
    coordinate carries a nonzero entry of ``p`` and the first two
    coordinates are not both constant.

    Deforming a coordinate where ``p`` vanishes leaves ``p`` a syzygy of the
    family, so the class would not rise.
    """
    for perm in itertools.permutations(range(3)):
        first, second = perm[0], perm[1]
        if not basis.p.coords[first]:
            continue
        if triple.polys[first].degree < 1 and triple.polys[second].degree < 1:
            continue
        return perm
    raise InternalInconsistency("no coordinate order fits the deformation")


@dataclass
class CheckResult:
    passed: Optional[bool]
    detail: str = ""


@dataclass
class VerificationReport:
    checks: dict
    mu_origin: int
    mu_eps: int
    target_mu: int
    witness: Optional[SyzygyVec] = None
    specializations: list = field(default_factory=list)
    permutation: Tuple[int, int, int] = IDENTITY
    theorem_applies: bool = True
    pre_shear: Optional[object] = None

    BULLETS = ("gcd", "degree", "class", "specialization")

    @property
    def passed(self):
        return (all(self.checks[k].passed for k in self.BULLETS)
                and all(c.passed is not False for c in self.checks.values()))

    def failures(self):
        return [k for k, c in self.checks.items() if c.passed is False]


def _specialization_points(L, rng, count):
    if L.is_finite:
        pool = [v for v in itertools.islice(L.candidates(), L.order) if not L.is_zero(v)]
        rng.shuffle(pool)
        return pool[:count]
    return [L.convert(rng.randint(1, 10 ** 6)) for _ in range(count)]


def verify_approx(seq, *, seed=0, probes=8):
    """Check the four properties of an approximating family, exactly.

    ``class`` uses fraction-free elimination over ``K[eps]``; it is cross
    checked against a lower bound from random specializations of ``eps``
    (class can only drop under specialization) and the upper bound given
    by the witness syzygy.
    """
    R = seq.ctx
    L = R.base
    family = seq.triple
    origin = seq.origin
    checks = {}

    g = gcd_many(*family.polys)
    checks["gcd"] = CheckResult(g.degree == 0, f"gcd = {g}")
    checks["degree"] = CheckResult(family.n == origin.n, f"n_eps = {family.n}, n = {origin.n}")
    checks["polynomial_in_eps"] = CheckResult(seq.is_polynomial_in_eps())

    mu_origin = mu(origin)
    theorem_applies = mu_origin < origin.n // 2
    mu_eps = mu_fraction_free(family)
    detail = f"mu_eps = {mu_eps}, target = {seq.target_mu}"
    if not theorem_applies:
        detail += f"; MuMaximal: mu = {mu_origin} = floor(n/2), construction needs mu < floor(n/2)"
    checks["class"] = CheckResult(theorem_applies and mu_eps == seq.target_mu, detail)

    try:
        at_zero = specialize_triple(family, L.zero)
        checks["specialization"] = CheckResult(at_zero == origin, "eps = 0 gives origin")
    except Exception as exc:  # pole at eps = 0
        checks["specialization"] = CheckResult(False, str(exc))

    upper = None
    if seq.witness is not None:
        w = seq.witness
        ok = not w.is_zero() and w.annihilates(family)
        upper = w.degree
        checks["witness"] = CheckResult(ok, f"degree {w.degree} syzygy annihilates the family")

    rng = random.Random(seed)
    lower = 0
    samples = []
    if seq.is_polynomial_in_eps():
        for value in _specialization_points(L, rng, probes):
            m = mu(specialize_triple(family, value))
            samples.append((value, m))
            lower = max(lower, m)
            if lower >= mu_eps:
                break
    agree = lower == mu_eps and (upper is None or mu_eps <= upper)
    if not agree and lower < mu_eps and L.is_finite and L.order <= 4 * probes:
        agree = None
    checks["cross_check"] = CheckResult(
        agree, f"specialization lower bound {lower}, witness upper bound {upper}")

    return VerificationReport(checks, mu_origin, mu_eps, seq.target_mu, seq.witness,
                              samples, seq.permutation, theorem_applies, seq.pre_shear)


def construct(triple, policy=BASE_ONLY, *, seed=0):
    """Approximating family for ``triple`` and its verification report.

    Coordinates are reordered per :func:`choose_permutation`; if no
    admissible ``(lambda, alpha)`` exists, ``a`` is first replaced by
    ``a + nu c`` for the next ``nu`` in candidate order.
    """
    n = triple.n
    basis = mu_basis(triple)
    if basis.mu >= n // 2:
        raise MuMaximal(f"mu = {basis.mu} = floor(n/2) = {n // 2}; no class mu + 1 exists")
    perm = choose_permutation(triple, basis)
    if perm != IDENTITY:
        basis = permute_basis(basis, perm)
    K = triple.ctx
    failure = None
    for nu in itertools.islice(K.candidates(), PRE_SHEAR_BUDGET):
        work = basis if K.is_zero(nu) else pre_shear_basis(basis, nu)
        if not work.triple.a and not K.is_zero(nu):
            continue
        try:
            pick = find_admissible(work.triple, work, policy)
        except NoAdmissiblePick as exc:
            failure = failure or exc
            continue
        break
    else:
        raise failure
    seq = approx_sequence(pick)
    seq = transport(seq, pick.lam)
    if not K.is_zero(nu):
        seq = undo_pre_shear(seq, nu)
    seq = replace(permute(seq, _inverse(perm)), permutation=perm)
    return seq, verify_approx(seq, seed=seed)
