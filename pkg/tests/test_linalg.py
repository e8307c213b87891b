import random
from fractions import Fraction

import pytest

from extfactor.errors import NotSquare, Singular
from extfactor.fields import GF, QQ
from extfactor.linalg import (ExactMatrix, char_poly, min_poly,
                              multiplication_matrix, solve)
from extfactor.multipoly import BlockOrder, LexOrder, PolyRing, substitute_univariate
from extfactor.parser import parse_expression
from extfactor.reduction import GroebnerBasis, build_quotient, normal_form
from extfactor.unipoly import UniPoly


DEMO_MATRIX = [
    [0, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0],
    [2, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 2, 0, 0, 1, 0],
    [0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 1],
    [0, 0, -1, 1, 2, -2, 0, -1, 0, 3, 3, -1],
    [1, 0, 0, -1, -1, 2, 2, 0, -1, 0, -3, 3],
    [1, -1, 0, 0, 0, 1, 2, -2, -3, 1, 0, 3],
    [0, 1, 1, 0, -2, 0, -1, 2, 3, -3, -1, 0],
]

DEMO_CHARPOLY = [55872, -134592, 155984, -109088, 49922, -17916, 6802,
                 -2064, 371, -116, 26, 0, 1]


def demo_quotient():
    ring = PolyRing(QQ, ("x1", "x2"), LexOrder())
    gb = GroebnerBasis([parse_expression("x1^2 + 1", ring),
                        parse_expression("x2^2 + x1", ring)])
    ring_xy = PolyRing(QQ, ("x1", "x2", "y"), BlockOrder(LexOrder()))
    h = parse_expression(
        "y^3 + (x1*x2 - 2*x1 - x2)*y^2 + (x1*x2 + 2*x2 - 2)*y + x1 - x1*x2",
        ring_xy)
    return ring_xy, gb, build_quotient(gb, h)


def qmat(rows):
    return ExactMatrix(QQ, [[Fraction(v) for v in row] for row in rows])


def test_multiplication_matrix_matches_reference():
    ring_xy, gb, qp = demo_quotient()
    r = parse_expression("x1 + 2*x2 + y", ring_xy)
    M = multiplication_matrix(r, qp)
    assert M == qmat(DEMO_MATRIX)


def test_multiplication_matrix_identity_and_zero():
    ring_xy, gb, qp = demo_quotient()
    one = parse_expression("1", ring_xy)
    assert multiplication_matrix(one, qp) == ExactMatrix.identity(QQ, 12)
    zero = ring_xy.zero()
    assert multiplication_matrix(zero, qp) == ExactMatrix.zeros(QQ, 12, 12)


@pytest.mark.parametrize("algorithm", ["hessenberg", "berkowitz"])
def test_char_poly_reference(algorithm):
    p = char_poly(qmat(DEMO_MATRIX), algorithm=algorithm)
    assert p == UniPoly.from_ints(QQ, DEMO_CHARPOLY)


@pytest.mark.parametrize("algorithm", ["hessenberg", "berkowitz"])
def test_char_poly_small(algorithm):
    ident = ExactMatrix.identity(QQ, 3)
    assert char_poly(ident, algorithm=algorithm) == UniPoly.from_ints(QQ, [-1, 3, -3, 1])
    diag = qmat([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    expected = (UniPoly.from_ints(QQ, [-1, 1]) * UniPoly.from_ints(QQ, [-2, 1])
                * UniPoly.from_ints(QQ, [-3, 1]))
    assert char_poly(diag, algorithm=algorithm) == expected


def test_char_poly_not_square():
    with pytest.raises(NotSquare):
        char_poly(ExactMatrix(QQ, [[QQ.one, QQ.zero]]))


def test_min_poly_identity_and_jordan():
    assert min_poly(ExactMatrix.identity(QQ, 5)) == UniPoly.from_ints(QQ, [-1, 1])
    nilpotent = qmat([[0, 1], [0, 0]])
    assert min_poly(nilpotent) == UniPoly.from_ints(QQ, [0, 0, 1])


def test_min_poly_equals_char_poly_when_squarefree():
    M = qmat(DEMO_MATRIX)
    assert min_poly(M) == char_poly(M)


def test_min_poly_divides_char_poly_and_detects_repeats():
    # two Jordan blocks for eigenvalue 1: min poly (t-1)^2, char poly (t-1)^4
    M = qmat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    mp, cp = min_poly(M), char_poly(M)
    assert (cp % mp).is_zero
    assert mp.degree < cp.degree
    assert not cp.is_squarefree()


def test_block_diagonal_char_poly_multiplies():
    rng = random.Random(21)
    for _ in range(20):
        n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
        A = [[Fraction(rng.randint(-3, 3)) for _ in range(n1)] for _ in range(n1)]
        B = [[Fraction(rng.randint(-3, 3)) for _ in range(n2)] for _ in range(n2)]
        blocks = [[A[i][j] if i < n1 and j < n1 else
                   (B[i - n1][j - n1] if i >= n1 and j >= n1 else Fraction(0))
                   for j in range(n1 + n2)] for i in range(n1 + n2)]
        M = ExactMatrix(QQ, blocks)
        assert char_poly(M) == char_poly(ExactMatrix(QQ, A)) * char_poly(ExactMatrix(QQ, B))


def test_solve_identity_and_diag():
    n = 4
    I = ExactMatrix.identity(QQ, n)
    b = [Fraction(k) for k in range(n)]
    assert solve(I, b) == b
    D = qmat([[2, 0], [0, 4]])
    assert solve(D, [Fraction(1), Fraction(1)]) == [Fraction(1, 2), Fraction(1, 4)]


def test_solve_singular_kernel_witness():
    M = qmat([[1, 1], [1, 1]])
    with pytest.raises(Singular) as info:
        solve(M, [Fraction(1), Fraction(0)])
    kernel = info.value.kernel
    assert any(v != 0 for v in kernel)
    assert M.mat_vec(kernel) == [Fraction(0), Fraction(0)]


def test_solve_random_systems():
    rng = random.Random(22)
    for field in (QQ, GF(101)):
        for _ in range(40):
            n = rng.randint(1, 5)
            M = ExactMatrix(field, [[field.from_int(rng.randint(-5, 5))
                                     for _ in range(n)] for _ in range(n)])
            b = [field.from_int(rng.randint(-5, 5)) for _ in range(n)]
            try:
                x = solve(M, b)
            except Singular as exc:
                assert M.mat_vec(exc.kernel) == [field.zero] * n
                assert any(v != field.zero for v in exc.kernel)
                continue
            assert M.mat_vec(x) == b


def test_cayley_hamilton_through_quotient():
    ring_xy, gb, qp = demo_quotient()
    rng = random.Random(23)
    for _ in range(10):
        coeffs = [rng.randint(-3, 3) for _ in range(2)]
        text = f"y + {coeffs[0]}*x1 + {coeffs[1]}*x2"
        r = parse_expression(text, ring_xy)
        p_r = char_poly(multiplication_matrix(r, qp))
        value = substitute_univariate(p_r, r, reduce_fn=qp.reduce)
        assert value.is_zero
