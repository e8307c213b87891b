"""Factorization of univariate polynomials over algebraic extension
fields K = k[x1..xn]/I, with I maximal and presented by a Groebner
basis.  All arithmetic is exact; the heavy lifting is linear algebra
over the ground field plus univariate factorization.
"""

from .driver import (FactorOptions, FactorizationResult, charpoly_of_r,
                     choose_r, factor, factor_squarefree)
from .extfield import (Extension, ExtElement, ExtPoly, ext_inv,
                       extpoly_gcd, natural_lift, sigma, squarefree_part)
from .fields import GF, QQ
from .linalg import ExactMatrix, char_poly, min_poly, multiplication_matrix, solve
from .multipoly import (BlockOrder, GrevlexOrder, LexOrder, MultiPoly,
                        PolyRing, mono_cmp, substitute_univariate)
from .parser import parse_expression, parse_problem
from .reduction import (GroebnerBasis, QuotientPresentation, build_quotient,
                        is_groebner, normal_form, staircase)
from .unifactor import (UniFactorization, factor_Fp, factor_Q, factor_poly,
                        squarefree_decompose)
from .unipoly import UniPoly

__version__ = "0.1.0"
