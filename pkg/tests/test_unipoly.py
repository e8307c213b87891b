import random
from fractions import Fraction

import pytest

from extfactor.errors import DivisionByZeroPoly
from extfactor.fields import GF, QQ
from extfactor.unipoly import UniPoly


def Q(*ints):
    return UniPoly.from_ints(QQ, ints)


def test_divmod_exact():
    q, r = Q(-1, 0, 1).divmod(Q(-1, 1))  # (t^2 - 1) / (t - 1)
    assert q == Q(1, 1) and r.is_zero


def test_divmod_degree_shortfall():
    q, r = Q(0, 1).divmod(Q(0, 0, 1))
    assert q.is_zero and r == Q(0, 1)


def test_divmod_with_remainder():
    f, g = Q(1, 2, 0, 1), Q(1, 1)  # t^3 + 2t + 1 by t + 1
    q, r = f.divmod(g)
    assert q == Q(3, -1, 1) and r == Q(-2)
    assert q * g + r == f


def test_division_by_zero_poly():
    with pytest.raises(DivisionByZeroPoly):
        Q(1, 1).divmod(UniPoly.zero(QQ))


def test_gcd_basics():
    f = Q(2, 0, 4)
    assert f.gcd(UniPoly.zero(QQ)) == f.monic()
    assert Q(-1, 0, 1).gcd(Q(-1, 1)) == Q(-1, 1)


def test_gcd_constructed_common_factor():
    common = Q(1, 0, 1)  # t^2 + 1
    f = common * Q(-2, 1)
    g = common * Q(3, 1)
    assert f.gcd(g) == common


def test_derivative():
    assert Q(0, 2, 0, 1).derivative() == Q(2, 0, 3)
    assert Q(5).derivative().is_zero
    F5 = GF(5)
    f = UniPoly.from_ints(F5, [0, 0, 0, 0, 0, 1])  # t^5
    assert f.derivative().is_zero


def test_random_division_invariant():
    rng = random.Random(3)
    for _ in range(300):
        f = Q(*[rng.randint(-9, 9) for _ in range(rng.randint(0, 7))])
        g = Q(*[rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
        if g.is_zero:
            continue
        q, r = f.divmod(g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_random_gcd_divides_both():
    rng = random.Random(4)
    for field in (QQ, GF(13)):
        for _ in range(150):
            f = UniPoly.from_ints(field, [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            g = UniPoly.from_ints(field, [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            if f.is_zero and g.is_zero:
                continue
            d = f.gcd(g)
            if d.is_zero:
                continue
            assert (f % d).is_zero and (g % d).is_zero
            assert d.lead == field.one


def test_rational_gcd_avoids_blowup():
    # coefficients stay exact through a deliberately unbalanced gcd chain
    f = Q(1, 3, 3, 1) * Q(7, -5, 11, 2)
    g = Q(1, 3, 3, 1) * Q(-4, 9, 1)
    assert f.gcd(g) == Q(1, 3, 3, 1).monic()


def test_eval_and_pow_mod():
    f = Q(1, 0, 1)
    assert f.eval(Fraction(2)) == 5
    F7 = GF(7)
    m = UniPoly.from_ints(F7, [1, 0, 1])
    x = UniPoly.x(F7)
    assert x.pow_mod(2, m) == UniPoly.from_ints(F7, [-1])
    assert x.pow_mod(4, m) == UniPoly.one(F7)
    assert x.pow_mod(103, m) == (x ** 103) % m


def test_is_squarefree():
    assert Q(-1, 0, 1).is_squarefree()
    assert not (Q(1, 1) * Q(1, 1)).is_squarefree()
    F5 = GF(5)
    assert not UniPoly.from_ints(F5, [1, 0, 0, 0, 0, 1]).is_squarefree()  # (t+1)^5
