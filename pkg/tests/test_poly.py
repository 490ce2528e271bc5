import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from muclass import QQ, Extension, Poly, PrimeField, RootPolicy
from muclass.errors import (ConstantPolynomial, DivisionByZeroPoly,
                            NoRootInPolicy, NotARoot)
from muclass.poly import (NEG_INF, RootHandle, divide_by_linear, find_root,
                          finite_field_roots, gcd, squarefree_part)

from conftest import P
from oracles import to_sympy_poly

F3 = PrimeField(3)
F5 = PrimeField(5)
F101 = PrimeField(101)


def test_zero_degree_is_minus_infinity():
    assert Poly.zero(QQ).degree == NEG_INF
    assert Poly.zero(QQ).degree < 0 and Poly.zero(QQ).degree < -10 ** 9


def test_divmod_examples():
    assert divmod(P("(t-1)^2"), P("t-1")) == (P("t-1"), P("0"))
    assert divmod(P("t^2+1"), P("t")) == (P("t"), P("1"))


def test_divmod_over_f5():
    f, g = P("t^5 - t", F5), P("t^2 + 1", F5)
    q, r = divmod(f, g)
    # oracle: sympy division over GF(5)
    sq, sr = to_sympy_poly([0, -1, 0, 0, 0, 1], 5).div(to_sympy_poly([1, 0, 1], 5))
    assert q == P("t^3 + 4t", F5)
    assert [int(c) % 5 for c in reversed(sq.all_coeffs())] == list(q.coeffs)
    assert not r and sr.is_zero
    assert q * g + r == f


def test_divmod_by_zero():
    with pytest.raises(DivisionByZeroPoly):
        divmod(P("t"), Poly.zero(QQ))


def test_gcd_examples():
    assert gcd(P("(t-1)^2"), P("t^3 - t")) == P("t - 1")
    assert gcd(P("t - 1"), P("t - 1")) == P("t - 1")  # p_y = p_w = t - 1
    assert gcd(P("3t^2 + 3"), Poly.zero(QQ)) == P("t^2 + 1")
    assert gcd(Poly.zero(QQ), Poly.zero(QQ)) == Poly.zero(QQ)


def _rand_poly(K, rng, deg):
    return Poly.from_payloads(K, [K.random(rng) for _ in range(deg + 1)])


@pytest.mark.parametrize("K", [QQ, F101, F3], ids=repr)
def test_divmod_round_trip(K):
    rng = random.Random(5)
    for _ in range(1000):
        f = _rand_poly(K, rng, rng.randint(0, 8))
        g = _rand_poly(K, rng, rng.randint(0, 5))
        if not g:
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


@pytest.mark.parametrize("K", [QQ, F101], ids=repr)
def test_gcd_divides_and_is_greatest(K):
    rng = random.Random(6)
    for _ in range(200):
        common = _rand_poly(K, rng, rng.randint(0, 3))
        f = _rand_poly(K, rng, 4) * common
        g = _rand_poly(K, rng, 3) * common
        h = gcd(f, g)
        if not h:
            continue
        assert not f % h and not g % h
        if common:
            assert not h % common.monic()
        assert h.lc == K.one


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7),
       st.lists(st.integers(-20, 20), min_size=1, max_size=5))
def test_gcd_symmetric(f, g):
    f, g = Poly(QQ, f), Poly(QQ, g)
    assert gcd(f, g) == gcd(g, f)


def test_divide_by_linear_quintic_quotient():
    f = P("-1/12 t^5 + 1/12 t^4 + 13/12 t^2 - 2t + 1")
    root = find_root(f)
    assert root.value == 2
    assert divide_by_linear(f, root) == P("-1/12 t^4 - 1/12 t^3 - 1/6 t^2 + 3/4 t - 1/2")


def test_divide_by_linear_double_root():
    root = find_root(P("(t-1)^2"))
    assert root.value == 1
    assert divide_by_linear(P("(t-1)^2"), root) == P("t - 1")


def test_divide_by_linear_in_extension():
    E = Extension(QQ, [-2, 0, 1])
    f = Poly(E, [-2, 0, 1])
    alpha = RootHandle(E.gen, E, f)
    q = divide_by_linear(f, alpha)
    assert q == Poly(E, [E.gen, E.one])  # t + alpha
    assert Poly(E, [E.neg(E.gen), E.one]) * q == f


def test_divide_by_linear_rejects_non_root():
    with pytest.raises(NotARoot):
        divide_by_linear(P("t^2 + 1"), RootHandle(Fraction(1), QQ, P("t - 1")))


def test_find_root_policies():
    with pytest.raises(NoRootInPolicy):
        find_root(P("t^2 - 2"))
    with pytest.raises(ConstantPolynomial):
        find_root(P("5"))
    assert find_root(P("(2t - 3)(t^2 + 1)")).value == Fraction(3, 2)
    assert find_root(P("t^2 - 1"), RootPolicy(candidates=[-1])).value == -1


def test_find_root_extension_over_f3():
    f = P("t^2 + 1", F3)
    with pytest.raises(NoRootInPolicy):
        find_root(f)
    root = find_root(f, RootPolicy(allow_extension=True))
    F9 = root.context
    assert F9 == Extension(F3, [1, 0, 1])
    assert root.value == F9.gen
    lifted = Poly(F9, [F9.embed(c) for c in f.coeffs])
    assert F9.is_zero(lifted.eval(root.value))


@pytest.mark.parametrize("p", [2, 3, 5, 101])
def test_finite_field_roots_match_brute_force(p):
    K = PrimeField(p)
    rng = random.Random(p)
    for _ in range(60):
        f = _rand_poly(K, rng, rng.randint(1, 7))
        if f.degree < 1:
            continue
        brute = {x for x in range(p) if f.eval(x) == 0}
        assert set(finite_field_roots(f, random.Random(0))) == brute


def test_find_root_is_deterministic_and_certified():
    rng = random.Random(9)
    for _ in range(50):
        f = _rand_poly(F101, rng, 5)
        if f.degree < 1:
            continue
        try:
            r1 = find_root(f)
        except NoRootInPolicy:
            continue
        assert find_root(f) == r1
        assert f.eval(r1.value) == 0


def _monic_polys(K, max_deg):
    elems = list(K.candidates()) if K.is_finite else [K.zero, K.one, K.neg(K.one), K.convert(2)]
    out = []
    for d in range(1, max_deg + 1):
        for tail in itertools.product(elems, repeat=d):
            out.append(Poly(K, list(tail) + [K.one]))
    return out


def test_squarefree_examples():
    assert squarefree_part(P("(t-1)^2")) == P("t - 1")
    assert squarefree_part(P("t^3 - t")) == P("t^3 - t")
    assert squarefree_part(P("t^3 - 1", F3)) == P("t - 1", F3)


@pytest.mark.parametrize("K", [QQ, F3, PrimeField(2), F5], ids=repr)
def test_squarefree_part_properties(K):
    rng = random.Random(10)
    for _ in range(100):
        factors = [_rand_poly(K, rng, rng.randint(1, 2)) for _ in range(3)]
        factors = [f for f in factors if f.degree >= 1]
        if not factors:
            continue
        f = Poly.const(K, K.one)
        for g in factors:
            f = f * g ** rng.randint(1, 4)
        s = squarefree_part(f)
        assert not f % s
        for g in factors:
            assert not s % squarefree_part(g)
        # no monic g of degree 1 or 2 has g^2 dividing s (factors have degree <= 2)
        for g in _monic_polys(K, 2):
            if g.degree >= 1:
                assert s % (g * g) or not s
