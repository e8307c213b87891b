import random

import pytest

from extfactor.errors import ArityMismatch
from extfactor.fields import GF, QQ
from extfactor.multipoly import (BlockOrder, GrevlexOrder, LexOrder, PolyRing,
                                 mono_cmp, substitute_univariate)
from extfactor.parser import parse_expression
from extfactor.unipoly import UniPoly


def ring_q2(order=None):
    return PolyRing(QQ, ("x1", "x2"), order or LexOrder())


def P(text, ring):
    return parse_expression(text, ring)


def test_block_dominance():
    order = BlockOrder(LexOrder())
    y = (0, 0, 1)
    big_x = (100, 100, 0)
    assert mono_cmp(y, big_x, order) > 0
    assert mono_cmp(big_x, y, order) < 0
    assert mono_cmp(y, y, order) == 0


def test_lex_precedence_increases_along_declaration():
    # the later-declared variable is the bigger one: x2 beats any power of x1
    order = LexOrder()
    x2 = (0, 1)
    x1_cubed = (3, 0)
    assert mono_cmp(x2, x1_cubed, order) > 0


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        mono_cmp((1, 0), (1, 0, 0), LexOrder())


def test_grevlex_degree_first():
    order = GrevlexOrder()
    assert mono_cmp((0, 2), (1, 0), order) > 0     # degree wins
    assert mono_cmp((1, 1), (0, 2), order) < 0     # tie: reverse-lex on x1
    assert mono_cmp((0, 1), (1, 0), order) > 0     # x2 above x1


def test_add_and_cancel():
    R = ring_q2()
    p = P("x1^2 + 2*x1*x2 - 3", R)
    assert (p + (-p)).is_zero
    assert (p - p).is_zero


def test_product_difference_of_squares():
    R = ring_q2()
    assert P("(x1+x2)*(x1-x2)", R) == P("x1^2 - x2^2", R)


def test_lifted_coefficient_expansion():
    # the degree-2 coefficient of the demo lift, expanded against y
    Rxy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    p = P("(x1*x2 - 2*x1 - x2) * y^2", Rxy)
    q = P("x1*x2*y^2 - 2*x1*y^2 - x2*y^2", Rxy)
    assert p == q


def test_ring_axioms_randomized():
    rng = random.Random(11)
    for field in (QQ, GF(13)):
        R = PolyRing(field, ("x1", "x2"), LexOrder())

        def rand_poly():
            out = R.zero()
            for _ in range(rng.randint(0, 3)):
                mono = (rng.randint(0, 2), rng.randint(0, 2))
                out = out + R.monomial(mono, field.from_int(rng.randint(-4, 4)))
            return out

        for _ in range(250):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a


def test_mono_cmp_transitive_and_mul_compatible():
    rng = random.Random(12)
    for order in (LexOrder(), GrevlexOrder(), BlockOrder(GrevlexOrder())):
        n = 3
        for _ in range(200):
            a = tuple(rng.randint(0, 4) for _ in range(n))
            b = tuple(rng.randint(0, 4) for _ in range(n))
            c = tuple(rng.randint(0, 4) for _ in range(n))
            if mono_cmp(a, b, order) < 0 and mono_cmp(b, c, order) < 0:
                assert mono_cmp(a, c, order) < 0
            if mono_cmp(a, b, order) < 0:
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                assert mono_cmp(ac, bc, order) < 0
        one = (0,) * n
        for _ in range(50):
            m = tuple(rng.randint(0, 4) for _ in range(n))
            if m != one:
                assert mono_cmp(one, m, order) < 0


def test_substitute_identity_and_square():
    R = ring_q2()
    r = P("x1 + 2*x2", R)
    ident = UniPoly.x(QQ)
    assert substitute_univariate(ident, r) == r
    sq = UniPoly.from_ints(QQ, [0, 0, 1])
    assert substitute_univariate(sq, P("x1 + 1", R)) == P("x1^2 + 2*x1 + 1", R)


def test_substitute_is_multiplicative():
    rng = random.Random(13)
    R = ring_q2()
    r = P("x1 - x2 + 2", R)
    for _ in range(50):
        q1 = UniPoly.from_ints(QQ, [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
        q2 = UniPoly.from_ints(QQ, [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
        left = substitute_univariate(q1 * q2, r)
        right = substitute_univariate(q1, r) * substitute_univariate(q2, r)
        assert left == right


def test_quartic_substitution_matches_expansion():
    Rxy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    q = UniPoly.from_ints(QQ, [18, -12, 10, 0, 1])
    r = P("x1 + 2*x2 + y", Rxy)
    direct = r ** 4 + P("10", Rxy) * r ** 2 - P("12", Rxy) * r + P("18", Rxy)
    assert substitute_univariate(q, r) == direct
