"""Low-level dense univariate polynomial routines.

Polynomials are tuples of field payloads in ascending degree order with no
trailing zeros; the empty tuple is the zero polynomial. Every routine takes
the coefficient field ``K`` explicitly, in the style of sympy's ``dup_*``
functions, so the same code serves the rationals, prime fields, extension
rings and the rational-function field.
"""

from .errors import DivisionByZeroPoly


def dup_strip(f, K):
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return tuple(f)


def dup_degree(f):
    return len(f) - 1


def dup_lc(f, K):
    return f[-1] if f else K.zero


def dup_add(f, g, K):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return dup_strip(out, K)


def dup_neg(f, K):
    return tuple(K.neg(c) for c in f)


def dup_sub(f, g, K):
    return dup_add(f, dup_neg(g, K), K)


def dup_mul_ground(f, c, K):
    if K.is_zero(c):
        return ()
    return dup_strip([K.mul(a, c) for a in f], K)


def dup_mul_xk(f, k, K):
    if not f:
        return ()
    return (K.zero,) * k + tuple(f)


def dup_mul(f, g, K):
    if not f or not g:
        return ()
    out = [K.zero] * (len(f) + len(g) - 1)
    add, mul = K.add, K.mul
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = add(out[i + j], mul(a, b))
    return dup_strip(out, K)


def dup_divmod(f, g, K):
    if not g:
        raise DivisionByZeroPoly("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return (), dup_strip(f, K)
    inv_lc = K.inv(g[-1])
    q = [K.zero] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if K.is_zero(c):
            continue
        c = K.mul(c, inv_lc)
        q[i - dg] = c
        for j in range(dg + 1):
            f[i - dg + j] = K.sub(f[i - dg + j], K.mul(c, g[j]))
    return dup_strip(q, K), dup_strip(f[:dg], K)


def dup_rem(f, g, K):
    return dup_divmod(f, g, K)[1]


def dup_quo(f, g, K):
    return dup_divmod(f, g, K)[0]


def dup_monic(f, K):
    if not f:
        return ()
    lc = f[-1]
    if K.is_one(lc):
        return tuple(f)
    return dup_mul_ground(f, K.inv(lc), K)


def dup_gcd(f, g, K):
    """Monic gcd by the plain Euclidean algorithm."""
    f, g = dup_monic(f, K), dup_monic(g, K)
    while g:
        f, g = g, dup_monic(dup_rem(f, g, K), K)
    return f


def dup_gcdex(f, g, K):
    """Return ``(s, t, h)`` with ``s*f + t*g = h`` and ``h`` the monic gcd."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = (K.one,), ()
    t0, t1 = (), (K.one,)
    while r1:
        q, r = dup_divmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, dup_sub(s0, dup_mul(q, s1, K), K)
        t0, t1 = t1, dup_sub(t0, dup_mul(q, t1, K), K)
    if not r0:
        return (), (), ()
    inv = K.inv(r0[-1])
    return (dup_mul_ground(s0, inv, K), dup_mul_ground(t0, inv, K),
            dup_mul_ground(r0, inv, K))


def dup_eval(f, x, K):
    """Horner evaluation; ``x`` lives in ``K``."""
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def dup_diff(f, K):
    return dup_strip([K.mul(K.convert(i), c) for i, c in enumerate(f)][1:], K)


def dup_pow(f, e, K):
    result = (K.one,)
    base = tuple(f)
    while e:
        if e & 1:
            result = dup_mul(result, base, K)
        e >>= 1
        if e:
            base = dup_mul(base, base, K)
    return result


def dup_powmod(f, e, m, K):
    """``f**e mod m`` by square and multiply."""
    result = (K.one,)
    base = dup_rem(f, m, K)
    while e:
        if e & 1:
            result = dup_rem(dup_mul(result, base, K), m, K)
        e >>= 1
        if e:
            base = dup_rem(dup_mul(base, base, K), m, K)
    return result


def dup_compose_xp(f, p, K):
    """``f(x**p)``."""
    if not f:
        return ()
    out = [K.zero] * ((len(f) - 1) * p + 1)
    for i, c in enumerate(f):
        out[i * p] = c
    return tuple(out)
