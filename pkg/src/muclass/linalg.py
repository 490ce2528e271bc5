"""Exact dense linear algebra over a field context.

Matrices are lists of row lists of field payloads.
"""

from . import dense
from .errors import InternalInconsistency
from .fields import QQ


def _pick_pivot(M, rows, col, K, shortest):
    best = None
    best_len = None
    for i in rows:
        if K.is_zero(M[i][col]):
            continue
        if not shortest:
            return i
        weight = sum(1 for v in M[i] if not K.is_zero(v))
        if best is None or weight < best_len:
            best, best_len = i, weight
    return best


def rref(M, K):
    """Reduced row echelon form; returns ``(R, pivot_columns)``.

    Over Q the pivot row is the one with fewest nonzeros, which keeps
    coefficient growth down; the RREF itself does not depend on that choice.
    """
    M = [list(row) for row in M]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    shortest = K == QQ
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        i = _pick_pivot(M, range(r, nrows), col, K, shortest)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        inv = K.inv(M[r][col])
        M[r] = [K.mul(v, inv) for v in M[r]]
        prow = M[r]
        for j in range(nrows):
            if j == r:
                continue
            f = M[j][col]
            if K.is_zero(f):
                continue
            row = M[j]
            M[j] = [K.sub(row[k], K.mul(f, prow[k])) if not K.is_zero(prow[k]) else row[k]
                    for k in range(ncols)]
        pivots.append(col)
        r += 1
    return M[:r], pivots


def nullspace(M, K, ncols=None):
    """Echelon basis of the right kernel, one vector per free column in order."""
    if ncols is None:
        ncols = len(M[0])
    if not M:
        R, pivots = [], []
    else:
        R, pivots = rref(M, K)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [K.zero] * ncols
        v[free] = K.one
        for row, pc in zip(R, pivots):
            if not K.is_zero(row[free]):
                v[pc] = K.neg(row[free])
        basis.append(v)
    return basis


def rank(M, K):
    return len(rref(M, K)[1]) if M else 0


def solve(M, b, K):
    """A solution ``x`` of ``M x = b`` or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    ncols = len(M[0])
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug, K)
    if ncols in pivots:
        return None
    x = [K.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def bareiss_rank(M, K):
    """Rank over ``K(eps)`` of a matrix with entries in ``K[eps]``.

    Entries are ascending coefficient tuples over ``K``. Fraction-free
    elimination: every division by the previous pivot is exact, which is
    asserted.
    """
    M = [list(row) for row in M]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    prev = (K.one,)
    r = 0
    mul, sub = dense.dup_mul, dense.dup_sub
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if M[i][col]:
                if piv is None or len(M[i][col]) < len(M[piv][col]):
                    piv = i
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][col]
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[col]
            new = [()] * ncols
            for j in range(col + 1, ncols):
                v = sub(mul(p, row[j], K), mul(f, M[r][j], K), K)
                if v and prev != (K.one,):
                    v, rem = dense.dup_divmod(v, prev, K)
                    if rem:
                        raise InternalInconsistency("inexact Bareiss division")
                new[j] = v
            M[i] = new
        prev = p
        r += 1
    return r
