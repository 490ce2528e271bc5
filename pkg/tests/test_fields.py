import random
from fractions import Fraction

import pytest

from muclass.errors import (InvalidField, PoleAtSpecialization, ZeroDenominator,
                            ZeroDivisor, ZeroInversion)
from muclass.fields import (QQ, Extension, PrimeField, RatFunc, is_prime,
                            rational_candidates, ratfunc_make, specialize_eps)

F7 = PrimeField(7)
F101 = PrimeField(101)
SQRT2 = Extension(QQ, [-2, 0, 1])
F9 = Extension(PrimeField(3), [1, 0, 1])
QE = RatFunc(QQ)
FE = RatFunc(F101)

CONTEXTS = [QQ, F7, F101, SQRT2, F9, QE, FE]


def test_invert_prime_field():
    assert F7.inv(3) == 5


def test_invert_in_quadratic_extension():
    # extended gcd of x and x^2 - 2: x * (x/2) = 1
    inv = SQRT2.inv(SQRT2.gen)
    assert inv == (Fraction(0), Fraction(1, 2))
    assert SQRT2.mul(inv, SQRT2.gen) == SQRT2.one


def test_invert_zero_divisor_carries_factor():
    R = Extension(QQ, [2, -3, 1])  # (x - 1)(x - 2)
    with pytest.raises(ZeroDivisor) as info:
        R.inv(R.convert([-1, 1]))
    assert info.value.factor == (Fraction(-1), Fraction(1))


@pytest.mark.parametrize("K", CONTEXTS, ids=repr)
def test_zero_inversion(K):
    with pytest.raises(ZeroInversion):
        K.inv(K.zero)


def test_ratfunc_make_cancels():
    assert ratfunc_make([-1, 0, 1], [-1, 1]) == ((Fraction(1), Fraction(1)), (Fraction(1),))


def test_ratfunc_make_absorbs_constant_denominator():
    assert ratfunc_make([0, 2], [4]) == ((Fraction(0), Fraction(1, 2)), (Fraction(1),))


def test_ratfunc_make_zero_numerator():
    assert ratfunc_make([], [0, 1]) == QE.zero


def test_ratfunc_make_zero_denominator():
    with pytest.raises(ZeroDenominator):
        ratfunc_make([1], [])


def test_ratfunc_make_is_invariant_under_common_factor():
    from muclass import dense
    f, g, h = (tuple(map(Fraction, c)) for c in ([1, 2], [3, 0, 1], [5, 1]))
    fg, hg = dense.dup_mul(f, g, QQ), dense.dup_mul(h, g, QQ)
    assert ratfunc_make(fg, hg) == ratfunc_make(f, h)


def test_specialize_eps():
    assert specialize_eps(QE, QE.make([1, 1], [1]), QQ.zero) == 1
    assert specialize_eps(QE, QE.make([-1, 0, 1], [-1, 1]), QQ.one) == 2
    with pytest.raises(PoleAtSpecialization):
        specialize_eps(QE, QE.make([1], [0, 1]), QQ.zero)


def test_nested_ratfunc_rejected():
    with pytest.raises(InvalidField):
        RatFunc(QE)


@pytest.mark.parametrize("modulus", [[1, 1], [1, 0, 2], [1, 2, 1]])
def test_bad_extension_modulus(modulus):
    # degree < 2, non-monic, not squarefree
    with pytest.raises(InvalidField):
        Extension(QQ, modulus)


def test_primality_check():
    brute = [n for n in range(200) if n > 1 and all(n % d for d in range(2, n))]
    assert [n for n in range(200) if is_prime(n)] == brute
    assert is_prime(2 ** 61 - 1)
    assert not is_prime((2 ** 31 - 1) * (2 ** 61 - 1))
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    with pytest.raises(InvalidField):
        PrimeField(91)


def test_rational_candidate_order():
    it = rational_candidates()
    first = [next(it) for _ in range(9)]
    assert first == [0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3]


def test_prime_field_candidates_cover_field():
    assert list(F7.candidates()) == [0, 1, 6, 2, 5, 3, 4]


@pytest.mark.parametrize("K", CONTEXTS, ids=repr)
def test_field_axioms_on_random_pairs(K):
    rng = random.Random(1)
    for _ in range(1000):
        x, y, z = K.random(rng), K.random(rng), K.random(rng)
        assert K.add(x, y) == K.add(y, x)
        assert K.mul(x, y) == K.mul(y, x)
        assert K.add(K.add(x, y), z) == K.add(x, K.add(y, z))
        assert K.mul(K.mul(x, y), z) == K.mul(x, K.mul(y, z))
        assert K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z))
        assert K.add(x, K.neg(x)) == K.zero
        if not K.is_zero(x):
            assert K.mul(x, K.inv(x)) == K.one


@pytest.mark.parametrize("K", CONTEXTS, ids=repr)
def test_canonical_form_idempotent(K):
    rng = random.Random(2)
    for _ in range(200):
        x = K.random(rng)
        assert K.canonical(x) == x
        assert K.canonical(K.canonical(x)) == K.canonical(x)


def test_ratfunc_canonical_denominator_monic_and_coprime():
    from muclass import dense
    rng = random.Random(3)
    for _ in range(200):
        num, den = FE.random(rng)
        assert den[-1] == 1
        assert len(dense.dup_gcd(num, den, F101)) <= 1 or not num


@pytest.mark.parametrize("R", [QE, FE], ids=repr)
def test_specialization_is_ring_homomorphism(R):
    rng = random.Random(4)
    K = R.base
    checked = 0
    while checked < 500:
        x, y = R.random(rng), R.random(rng)
        v = K.random(rng)
        try:
            sx, sy = R.specialize(x, v), R.specialize(y, v)
            ssum = R.specialize(R.add(x, y), v)
            sprod = R.specialize(R.mul(x, y), v)
        except PoleAtSpecialization:
            continue
        assert ssum == K.add(sx, sy)
        assert sprod == K.mul(sx, sy)
        checked += 1
