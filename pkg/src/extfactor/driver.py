"""Factorization of f in K[y] by characteristic polynomials of
multiplication maps.

One node of work: lift f to h, present the quotient of <I, h> on its
staircase, pick a linear form r, compute the characteristic polynomial
p_r of multiplication by r, factor p_r over the ground field, and pull
each ground factor q back through gcd(f, q(r) reduced).  A multiplicity
one q certifies its gcd as irreducible; higher multiplicities recurse
with a fresh r.
"""

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import ExhaustedGrid, NotMaximalIdeal, RecursionLimit
from .extfield import (ExtPoly, multiplicity_of, natural_lift, sigma,
                       squarefree_part)
from .linalg import char_poly, min_poly, multiplication_matrix
from .multipoly import MultiPoly, substitute_univariate
from .reduction import build_quotient
from .unifactor import factor_poly

MULTIPLICITY_ONE = "MultiplicityOne"
IRREDUCIBLE_CHAR_POLY = "IrreducibleCharPoly"
DEGREE_ONE = "DegreeOne"


@dataclass
class FactorOptions:
    seed: int = 0
    max_random: int = 12
    prefer_minpoly: bool = None  # None resolves per ground field
    recursion_limit: int = 64
    forced_r: tuple = ()         # linear forms consumed in call order
    charpoly_algorithm: str = "hessenberg"


@dataclass
class CertifiedFactor:
    poly: ExtPoly
    multiplicity: int
    certified: bool
    certificate: str


@dataclass
class NodeTrace:
    depth: int
    r: MultiPoly
    dimension: int
    basis: tuple
    charpoly: object
    charpoly_factors: list
    squarefree: bool


@dataclass
class FactorizationResult:
    constant: object            # ExtElement
    factors: list               # of CertifiedFactor
    dimension: int
    r_used: list
    recursion_depth: int
    trace: list = dc_field(default_factory=list)

    def reconstruct(self, ext):
        out = ExtPoly(ext, (self.constant,))
        for fac in self.factors:
            out = out * fac.poly ** fac.multiplicity
        return out


def excluded_variables(gb_I):
    """Indices of x-variables that are leading monomials of the basis.

    Such a variable reduces away against the basis, so it contributes
    nothing to a linear form and is dropped from r.
    """
    out = set()
    n = gb_I.ring.nvars
    for lm in gb_I.lead_monomials:
        if sum(lm) == 1:
            out.add(lm.index(1))
    return out


def _grid_points(nvars, bound):
    """Deterministic enumeration of the coefficient grid.

    Tuples of nonnegative integers at most ``bound``, by increasing
    total sum and lexicographically within a sum, starting at all zero.
    """
    for total in range(nvars * bound + 1):
        for point in _compositions(total, nvars, bound):
            yield point


def _compositions(total, slots, bound):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bound) + 1):
        for rest in _compositions(total - first, slots - 1, bound):
            yield (first,) + rest


def choose_r(ext, attempt, rng, max_random=12, grid_bound=None):
    """Linear form y + sum(a_i x_i) for one attempt.

    Random attempts draw integers from [-B, B] with B = 3 * 2**(attempt // 3);
    from attempt ``max_random`` on, points come from the deterministic
    grid (origin first, so the first fallback is r = y).  Excluded
    variables keep coefficient zero throughout.
    """
    ring_xy = ext.ring_xy
    F = ext.field
    n = ext.ring.nvars
    excluded = excluded_variables(ext.gb)
    included = [i for i in range(n) if i not in excluded]
    if attempt < max_random:
        coeffs = {i: rng.randint(-(3 << (attempt // 3)), 3 << (attempt // 3))
                  for i in included}
    else:
        k = attempt - max_random
        if grid_bound is None:
            grid_bound = 1
        point = next(itertools.islice(
            _grid_points(len(included), grid_bound), k, None), None)
        if point is None:
            raise ExhaustedGrid("deterministic grid exhausted without a fresh r")
        coeffs = dict(zip(included, point))
    terms = {(0,) * n + (1,): F.one}
    for i, a in coeffs.items():
        if a:
            mono = tuple(1 if j == i else 0 for j in range(n)) + (0,)
            terms[mono] = F.from_int(a)
    return MultiPoly(ring_xy, terms)


def charpoly_of_r(r, qp, prefer_minpoly=False, algorithm="hessenberg"):
    """Characteristic polynomial of m_r plus a squarefreeness verdict.

    With ``prefer_minpoly`` the minimal polynomial is computed first:
    full degree means it already is the characteristic polynomial, and
    a degree deficit proves non-squarefreeness before any determinant
    work (the full polynomial is still produced for the caller).
    """
    M = multiplication_matrix(r, qp)
    if prefer_minpoly:
        mp = min_poly(M)
        if mp.degree == qp.dimension:
            return mp, mp.is_squarefree()
        p_r = char_poly(M, algorithm=algorithm)
        return p_r, False
    p_r = char_poly(M, algorithm=algorithm)
    return p_r, p_r.is_squarefree()


class _Session:
    def __init__(self, ext, options):
        self.ext = ext
        self.options = options
        self.rng = random.Random(options.seed)
        self.forced = list(options.forced_r)
        self.r_used = []
        self.trace = []
        self.max_depth = 0
        self.top_dimension = 0
        if options.prefer_minpoly is None:
            self.prefer_minpoly = (ext.field.characteristic != 0 and ext.dim <= 16)
        else:
            self.prefer_minpoly = options.prefer_minpoly

    def next_r(self, used, qp):
        if self.forced:
            r = self.forced.pop(0)
            if _r_key(r) in used:
                raise ValueError("forced r repeats an r already used on this branch")
            return r
        bound = max(1, qp.dimension * (qp.dimension - 1) // 2)
        for attempt in itertools.count():
            r = choose_r(self.ext, attempt, self.rng,
                         max_random=self.options.max_random, grid_bound=bound)
            if _r_key(r) not in used:
                return r


def _r_key(r):
    return tuple(sorted(r.terms.items()))


def _to_extpoly(reduced, qp, ext):
    """Split a fully reduced element of R_y into an element of K[y]."""
    from .multipoly import split_by_last
    parts = split_by_last(reduced, ext.ring)
    if not parts:
        return ExtPoly.zero(ext)
    top = max(parts)
    coeffs = []
    for i in range(top + 1):
        p = parts.get(i)
        coeffs.append(ext.element(p) if p is not None else ext.zero())
    return ExtPoly(ext, coeffs)


def factor_squarefree(f, ext, options=None):
    """Certified irreducible factors of a squarefree monic f in K[y].

    Recursion always re-lifts the smaller polynomial, so the quotient
    shrinks with each level; every factor in the result is certified
    and carries multiplicity one.
    """
    session = _Session(ext, options or FactorOptions())
    pairs = _factor_node(f, session, frozenset(), 0)
    pairs.sort(key=lambda t: t[0].sort_key())
    factors = [CertifiedFactor(g, 1, True, cert) for g, cert in pairs]
    return FactorizationResult(ext.one(), factors, session.top_dimension,
                               session.r_used, session.max_depth, session.trace)


def _factor_node(f, session, used, depth):
    ext = session.ext
    opts = session.options
    if depth > opts.recursion_limit:
        raise RecursionLimit(f"recursion exceeded {opts.recursion_limit} levels")
    session.max_depth = max(session.max_depth, depth)
    f = f.monic()
    if f.degree == 1:
        return [(f, DEGREE_ONE)]

    h = natural_lift(f)
    qp = build_quotient(ext.gb, h)
    if depth == 0 and session.top_dimension == 0:
        session.top_dimension = qp.dimension

    r = session.next_r(used, qp)
    session.r_used.append(r)
    used = used | {_r_key(r)}

    p_r, sqfree = charpoly_of_r(r, qp, prefer_minpoly=session.prefer_minpoly,
                                algorithm=opts.charpoly_algorithm)
    parts = factor_poly(p_r, session.rng).factors
    session.trace.append(NodeTrace(depth, r, qp.dimension, qp.staircase,
                                   p_r, parts, sqfree))

    if len(parts) == 1 and parts[0][1] == 1:
        return [(f, IRREDUCIBLE_CHAR_POLY)]

    out = []
    for q, mult in parts:
        reduced = substitute_univariate(q, r, reduce_fn=qp.reduce)
        g = _to_extpoly(reduced, qp, ext)
        fi = f.gcd(g)
        if fi.degree == 0:
            raise NotMaximalIdeal(message=(
                "a ground factor of the characteristic polynomial shares no "
                "factor with f; the ideal cannot be maximal"))
        if mult == 1:
            out.append((fi.monic(), MULTIPLICITY_ONE))
        elif fi.degree == 1:
            out.append((fi.monic(), DEGREE_ONE))
        else:
            out.extend(_factor_node(fi, session, used, depth + 1))
    return out


def factor(f, ext, options=None):
    """Full pipeline for any nonzero f in K[y].

    Extracts the leading coefficient, factors the squarefree part, then
    recovers multiplicities by exact trial division.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    options = options or FactorOptions()
    session = _Session(ext, options)

    constant = f.lead
    if f.degree == 0:
        return FactorizationResult(constant, [], 0, [], 0, [])

    fm = f.monic()
    sf = squarefree_part(fm)
    pairs = _factor_node(sf, session, frozenset(), 0)

    # deterministic order: by degree, then by coefficient representatives
    pairs.sort(key=lambda t: t[0].sort_key())

    factors = []
    work = fm
    for g, cert in pairs:
        mult, work = multiplicity_of(work, g)
        if mult == 0:
            raise NotMaximalIdeal(message=(
                "certified factor fails to divide the input; the ideal "
                "cannot be maximal"))
        factors.append(CertifiedFactor(g, mult, True, cert))
    if work.degree != 0:
        raise NotMaximalIdeal(message=(
            "trial division left a nontrivial cofactor; the ideal cannot "
            "be maximal"))

    return FactorizationResult(constant, factors, session.top_dimension,
                               session.r_used, session.max_depth, session.trace)
