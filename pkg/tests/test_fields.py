import random
from fractions import Fraction

import pytest

from extfactor.errors import BadModulus, ZeroInversion
from extfactor.fields import GF, QQ, is_prime


def test_rational_inverse():
    assert QQ.inv(Fraction(3, 4)) == Fraction(4, 3)
    assert QQ.inv(QQ.one) == QQ.one


def test_prime_field_inverse():
    F = GF(31)
    inv = F.inv(5)
    assert inv == 25
    assert F.mul(5, inv) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroInversion):
        QQ.inv(QQ.zero)
    with pytest.raises(ZeroInversion):
        GF(7).inv(0)


def test_composite_modulus_detected_lazily():
    F = GF(15)  # constructor only checks the size bound
    with pytest.raises(BadModulus):
        F.inv(5)


def test_modulus_size_limit():
    with pytest.raises(BadModulus):
        GF(1 << 64)
    with pytest.raises(BadModulus):
        GF(1)


def test_randomized_inverses():
    rng = random.Random(7)
    for _ in range(1000):
        num = rng.randint(-50, 50)
        den = rng.randint(1, 50)
        a = Fraction(num, den)
        if a != 0:
            assert QQ.mul(a, QQ.inv(a)) == QQ.one
    F = GF(10007)
    for _ in range(1000):
        a = rng.randrange(1, F.p)
        assert F.mul(a, F.inv(a)) == F.one


def test_canonical_residues():
    F = GF(7)
    assert F.from_int(-1) == 6
    assert F.add(5, 5) == 3
    assert F.sub(2, 5) == 4
    assert F.neg(0) == 0
    assert F.from_fraction(Fraction(1, 2)) == 4  # 2*4 = 8 = 1 mod 7


def test_is_prime_small_and_large():
    assert is_prime(2) and is_prime(3) and is_prime(10007)
    assert not is_prime(1) and not is_prime(4) and not is_prime(10001)
    assert is_prime((1 << 61) - 1)  # Mersenne prime fits the word bound
