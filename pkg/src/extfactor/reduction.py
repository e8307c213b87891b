"""Normal forms against a Groebner basis and staircase bases.

The basis is an input to this package, never computed here: the whole
point of the pipeline is that a basis of the extended ideal comes for
free, so a failed S-polynomial check aborts instead of silently running
Buchberger completion.
"""

import itertools
import warnings

from .errors import NotGroebner, NotMonicInY, NotZeroDimensional
from .multipoly import (BlockOrder, MultiPoly, PolyRing, embed, mono_div,
                        mono_divides, mono_lcm, mono_mul)


class GroebnerBasis:
    """Generators with monic leading coefficients plus their order."""

    def __init__(self, generators, verified=False):
        generators = list(generators)
        if not generators:
            raise ValueError("empty generator list")
        ring = generators[0].ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generators from mixed rings")
            if g.is_zero:
                raise ValueError("zero generator")
            lc = g.leading_coeff()
            if lc != ring.field.one:
                g = g.scale(ring.field.inv(lc))
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.lead_monomials = tuple(g.leading_monomial() for g in gens)
        self.verified = verified

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def normal_form(p, gb):
    """Unique remainder of p on division by the basis.

    Always rewrites the largest reducible term, breaking ties between
    reducers by taking the earliest-listed generator.
    """
    ring = p.ring
    if ring != gb.ring:
        raise ValueError("polynomial and basis from different rings")
    F = ring.field
    key = ring.order.key
    work = dict(p.terms)
    result = {}
    lead = gb.lead_monomials
    gens = gb.generators
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for i, lm in enumerate(lead):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                # work -= c * shift * g  (leading coefficients are monic,
                # and the leading term cancels by construction)
                for mg, cg in gens[i].terms.items():
                    mm = mono_mul(mg, shift)
                    if mm == m:
                        continue
                    s = F.sub(work.get(mm, F.zero), F.mul(c, cg))
                    if s == F.zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = s
                break
        else:
            result[m] = c
    return MultiPoly(ring, result)


def s_polynomial(f, g):
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lf, lg)
    cf, cg = f.leading_coeff(), g.leading_coeff()
    F = f.ring.field
    a = f.mul_term(mono_div(lcm, lf), F.inv(cf))
    b = g.mul_term(mono_div(lcm, lg), F.inv(cg))
    return a - b


def is_groebner(gb):
    """Buchberger check: every S-polynomial must reduce to zero.

    Pairs with coprime leading monomials are skipped (their S-polynomial
    always reduces to zero).  An S-polynomial reducing to a nonzero
    constant proves 1 lies in the ideal; that still passes, with a
    warning, since the basis does generate what it generates.
    """
    gens = gb.generators
    lead = gb.lead_monomials
    unit_ideal = any(all(e == 0 for e in lm) for lm in lead)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            li, lj = lead[i], lead[j]
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue
            rem = normal_form(s_polynomial(gens[i], gens[j]), gb)
            if rem.is_zero:
                continue
            if rem.is_constant():
                unit_ideal = True
                continue
            return False
    if unit_ideal:
        warnings.warn("basis generates the unit ideal (1 is a member)")
    return True


def staircase(gb):
    """Monomials under the staircase of the basis' leading monomials.

    Enumerated over the box of per-variable degree bounds in declared
    variable order (first variable outermost), matching the layout the
    quotient presentation promises for its vector-space basis.
    """
    lead = gb.lead_monomials
    n = gb.ring.nvars
    if any(all(e == 0 for e in lm) for lm in lead):
        return []  # unit ideal: nothing survives under a constant leading monomial
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lead
                if m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise NotZeroDimensional(
                f"no pure power of {gb.ring.varnames[i]} among the leading monomials")
        bounds.append(min(pure))
    out = []
    for expo in itertools.product(*[range(b) for b in bounds]):
        if not any(mono_divides(lm, expo) for lm in lead):
            out.append(expo)
    return out


class QuotientPresentation:
    """Groebner basis of <I, h> plus the staircase basis of its quotient."""

    def __init__(self, gb_q, basis, gb_I, x_staircase, y_degree):
        self.basis_of_ideal = gb_q
        self.staircase = tuple(basis)
        self.dimension = len(basis)
        self.gb_I = gb_I
        self.x_staircase = tuple(x_staircase)
        self.y_degree = y_degree
        self.ring = gb_q.ring
        self.index = {m: i for i, m in enumerate(self.staircase)}

    def reduce(self, p):
        return normal_form(p, self.basis_of_ideal)

    def coordinates(self, p):
        """Coordinate vector of a reduced polynomial w.r.t. the staircase."""
        F = self.ring.field
        vec = [F.zero] * self.dimension
        for m, c in p.terms.items():
            vec[self.index[m]] = c
        return vec


def build_quotient(gb_I, h):
    """Assemble the presentation of <I, h> from I's basis and a lift h.

    h must be monic as a polynomial in the eliminated variable; its
    lower coefficients are reduced against I eagerly so the generator
    set {G, h} is canonical.  The staircase is the x-staircase swept
    through the powers of y below deg h.
    """
    ring_xy = h.ring
    ring_x = gb_I.ring
    if ring_xy.nvars != ring_x.nvars + 1:
        raise ValueError("lift must live in the extended ring")
    if not isinstance(ring_xy.order, BlockOrder):
        raise ValueError("extended ring must carry the elimination order")
    d = h.degree_in(ring_xy.nvars - 1)
    if d < 1:
        raise NotMonicInY("lift does not involve the eliminated variable")

    gb_embedded = GroebnerBasis([embed(g, ring_xy) for g in gb_I.generators],
                                verified=gb_I.verified)
    # reduce every y-coefficient of h against I
    reduced = {}
    F = ring_xy.field
    for m, c in h.terms.items():
        reduced.setdefault(m[-1], {})[m] = c
    parts = []
    for e, terms in reduced.items():
        part = normal_form(MultiPoly(ring_xy, terms), gb_embedded)
        parts.append(part)
    h_reduced = ring_xy.zero()
    for part in parts:
        h_reduced = h_reduced + part

    ymono = (0,) * ring_x.nvars + (d,)
    if h_reduced.terms.get(ymono) != F.one or h_reduced.degree_in(ring_xy.nvars - 1) != d:
        raise NotMonicInY("lift is not monic in the eliminated variable")

    x_stair = staircase(gb_I)
    if not x_stair:
        from .errors import NotMaximalIdeal
        raise NotMaximalIdeal(message="ideal is the unit ideal, not maximal")
    basis = [m + (i,) for i in range(d) for m in x_stair]
    gb_q = GroebnerBasis(list(gb_embedded.generators) + [h_reduced],
                         verified=gb_I.verified)
    return QuotientPresentation(gb_q, basis, gb_I, x_stair, d)
