import random
import warnings

import pytest

from extfactor.errors import NotZeroDimensional
from extfactor.fields import GF, QQ
from extfactor.multipoly import BlockOrder, LexOrder, PolyRing
from extfactor.parser import parse_expression
from extfactor.reduction import (GroebnerBasis, build_quotient, is_groebner,
                                 normal_form, staircase)


@pytest.fixture
def demo():
    """The running example: I = <x1^2 + 1, x2^2 + x1> under lex, x2 above x1."""
    ring = PolyRing(QQ, ("x1", "x2"), LexOrder())
    gens = [parse_expression("x1^2 + 1", ring), parse_expression("x2^2 + x1", ring)]
    return ring, GroebnerBasis(gens)


def mono_strs(ring, monos):
    from extfactor.printing import poly_to_str
    return [poly_to_str(ring.monomial(m)) for m in monos]


def test_normal_form_of_generator_is_zero(demo):
    ring, gb = demo
    for g in gb.generators:
        assert normal_form(g, gb).is_zero


def test_normal_form_square(demo):
    ring, gb = demo
    p = parse_expression("x1^2", ring)
    assert normal_form(p, gb) == parse_expression("-1", ring)


def test_normal_form_chain(demo):
    # x2^4 = (x2^2)^2 = x1^2 = -1 after two reductions
    ring, gb = demo
    p = parse_expression("x2^4", ring)
    assert normal_form(p, gb) == parse_expression("-1", ring)


def test_normal_form_idempotent(demo):
    ring, gb = demo
    rng = random.Random(5)
    for _ in range(100):
        terms = {}
        p = ring.zero()
        for _ in range(rng.randint(0, 5)):
            mono = (rng.randint(0, 4), rng.randint(0, 4))
            p = p + ring.monomial(mono, QQ.from_int(rng.randint(-5, 5)))
        nf = normal_form(p, gb)
        assert normal_form(nf, gb) == nf


def test_normal_form_ring_homomorphism(demo):
    ring, gb = demo
    rng = random.Random(6)

    def rand_poly():
        p = ring.zero()
        for _ in range(rng.randint(0, 4)):
            mono = (rng.randint(0, 3), rng.randint(0, 3))
            p = p + ring.monomial(mono, QQ.from_int(rng.randint(-5, 5)))
        return p

    for _ in range(100):
        p, q = rand_poly(), rand_poly()
        lhs = normal_form(p * q, gb)
        rhs = normal_form(normal_form(p, gb) * normal_form(q, gb), gb)
        assert lhs == rhs


def test_is_groebner_demo_basis(demo):
    ring, gb = demo
    assert is_groebner(gb)


def test_is_groebner_single_generator():
    ring = PolyRing(QQ, ("x1", "x2"), LexOrder())
    gb = GroebnerBasis([parse_expression("x1^2 + x2", ring)])
    assert is_groebner(gb)


def test_is_groebner_rejects_incomplete_basis():
    ring = PolyRing(QQ, ("x1", "x2"), LexOrder())
    # LMs x2^2 and x1*x2 share x2; the S-polynomial leaves x1^3, reducible
    # by neither, so this pair is not a Groebner basis
    gens = [parse_expression("x2^2 + x1", ring),
            parse_expression("x1*x2 - 1", ring)]
    assert not is_groebner(GroebnerBasis(gens))


def test_is_groebner_unit_ideal_warns():
    ring = PolyRing(QQ, ("x1",), LexOrder())
    gens = [parse_expression("x1", ring), parse_expression("x1 + 1", ring)]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ok = is_groebner(GroebnerBasis(gens))
    assert ok
    assert any("unit ideal" in str(w.message) for w in caught)


def test_staircase_demo(demo):
    ring, gb = demo
    assert mono_strs(ring, staircase(gb)) == ["1", "x2", "x1", "x1*x2"]


def test_staircase_single_variable():
    ring = PolyRing(QQ, ("x1",), LexOrder())
    gb = GroebnerBasis([parse_expression("x1", ring)])
    assert staircase(gb) == [(0,)]


def test_staircase_infinite():
    ring = PolyRing(QQ, ("x1", "x2"), LexOrder())
    gb = GroebnerBasis([parse_expression("x1^2", ring)])
    with pytest.raises(NotZeroDimensional):
        staircase(gb)


def test_build_quotient_demo(demo):
    ring, gb = demo
    ring_xy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    h = parse_expression(
        "y^3 + (x1*x2 - 2*x1 - x2)*y^2 + (x1*x2 + 2*x2 - 2)*y + x1 - x1*x2",
        ring_xy)
    qp = build_quotient(gb, h)
    assert qp.dimension == 12
    assert mono_strs(ring_xy, qp.staircase) == [
        "1", "x2", "x1", "x1*x2",
        "y", "x2*y", "x1*y", "x1*x2*y",
        "y^2", "x2*y^2", "x1*y^2", "x1*x2*y^2"]


def test_build_quotient_recursion_step(demo):
    ring, gb = demo
    ring_xy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    h = parse_expression("y^2 - (2*x1 + x2)*y + x1*x2 - 1", ring_xy)
    qp = build_quotient(gb, h)
    assert qp.dimension == 8
    assert len(qp.staircase) == 8


def test_build_quotient_linear_lift(demo):
    ring, gb = demo
    ring_xy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    h = parse_expression("y", ring_xy)
    qp = build_quotient(gb, h)
    assert qp.dimension == 4
    assert qp.x_staircase == tuple(staircase(gb))


def test_build_quotient_dimension_product(demo):
    ring, gb = demo
    ring_xy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    for d in (1, 2, 3, 5):
        h = parse_expression("y", ring_xy) ** d + parse_expression("x1", ring_xy)
        qp = build_quotient(gb, h)
        assert qp.dimension == 4 * d
