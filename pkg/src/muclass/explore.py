"""Random parametrizations, class census and specialization probes."""

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import RejectionBudgetExceeded
from .poly import Poly, gcd_many
from .syzygy import ParamTriple, SyzygyVec, mu, mu_basis

DEFAULT_BUDGET = 1000


def _budget(ctx, budget):
    # rejection gets likelier as the field shrinks
    if ctx.is_finite and ctx.order < 8:
        return budget * 10
    return budget


def random_poly(ctx, degree, rng, exact=False):
    coeffs = [ctx.random(rng) for _ in range(degree + 1)]
    if exact:
        while ctx.is_zero(coeffs[-1]):
            coeffs[-1] = ctx.random(rng)
    return Poly.from_payloads(ctx, coeffs)


def sample_triple(n, ctx, rng, budget=DEFAULT_BUDGET):
    """Uniform random member of P_n: coprime, degree exactly n, ``c != 0``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for _ in range(_budget(ctx, budget)):
        a, b, c = (random_poly(ctx, n, rng) for _ in range(3))
        if not c or max(a.degree, b.degree, c.degree) != n:
            continue
        if gcd_many(a, b, c).degree == 0:
            return ParamTriple(a, b, c, check=False)
    raise RejectionBudgetExceeded(f"no valid degree-{n} triple after {budget} draws")


def triple_from_basis(p, q):
    """``p x q`` as a parametrization (unchecked)."""
    return ParamTriple(*p.cross(q), check=False)


def _random_syzygy(ctx, degree, rng):
    while True:
        coords = [random_poly(ctx, degree, rng) for _ in range(3)]
        if max(f.degree for f in coords) == degree:
            return SyzygyVec(*coords)


def sample_with_class(n, mu_target, ctx, rng, budget=DEFAULT_BUDGET):
    """Random triple of degree n and class exactly ``mu_target``, with its mu-basis."""
    if not 0 <= mu_target <= n // 2:
        raise ValueError(f"class must lie in [0, {n // 2}]")
    for _ in range(_budget(ctx, budget)):
        p = _random_syzygy(ctx, mu_target, rng)
        q = _random_syzygy(ctx, n - mu_target, rng)
        triple = triple_from_basis(p, q)
        if triple.n != n or not triple.c or not triple.is_coprime():
            continue
        if mu(triple) != mu_target:
            continue
        return triple, mu_basis(triple)
    raise RejectionBudgetExceeded(f"no class-{mu_target} triple of degree {n} after {budget} draws")


@dataclass
class CensusReport:
    n: int
    field: str
    samples: int
    seed: int
    histogram: dict = field(default_factory=dict)
    rejected: int = 0
    jobs: int = 1

    def fraction(self, m):
        return self.histogram.get(m, 0) / self.samples

    def to_dict(self):
        return {"n": self.n, "field": self.field, "samples": self.samples, "seed": self.seed,
                "jobs": self.jobs, "rejected": self.rejected,
                "histogram": {str(k): v for k, v in sorted(self.histogram.items())}}


def _census_chunk(n, count, ctx, seed):
    rng = random.Random(seed)
    hist = Counter()
    rejected = 0
    for _ in range(count):
        while True:
            a, b, c = (random_poly(ctx, n, rng) for _ in range(3))
            if c and max(a.degree, b.degree, c.degree) == n and gcd_many(a, b, c).degree == 0:
                break
            rejected += 1
            if rejected > _budget(ctx, DEFAULT_BUDGET) * count:
                raise RejectionBudgetExceeded("census rejection budget exhausted")
        hist[mu(ParamTriple(a, b, c, check=False))] += 1
    return hist, rejected


def census(n, count, ctx, seed=0, jobs=1):
    """Histogram of the class over ``count`` random members of P_n.

    With ``jobs > 1`` worker ``i`` draws its share with seed ``seed + i``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    if jobs <= 1:
        hist, rejected = _census_chunk(n, count, ctx, seed)
    else:
        shares = [count // jobs + (1 if i < count % jobs else 0) for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_census_chunk, [n] * jobs, shares, [ctx] * jobs,
                                  [seed + i for i in range(jobs)]))
        hist, rejected = Counter(), 0
        for h, r in parts:
            hist.update(h)
            rejected += r
    return CensusReport(n, ctx.descriptor(), count, seed, dict(sorted(hist.items())),
                        rejected, max(jobs, 1))


def specialization_probe(seq, eps_values):
    """Class of the family at each ``eps = value``."""
    base = seq.ctx.base
    out = []
    for value in eps_values:
        value = base.convert(value)
        out.append((value, mu(seq.specialize(value))))
    return out
