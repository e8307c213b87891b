"""Sparse multivariate polynomials and monomial orders.

Monomials are exponent tuples over a declared variable list.  Variable
precedence increases along the list, so a declaration ``x1 x2`` orders
x2 above x1 and the distinguished variable y, always occupying the last
slot, tops the block elimination order without further ceremony.
"""

import itertools

from .errors import ArityMismatch, ZeroInversion


class LexOrder:
    """Lexicographic: compare the highest-precedence exponent first."""

    name = "lex"

    def key(self, expo):
        return tuple(reversed(expo))

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)


class GrevlexOrder:
    """Graded reverse lexicographic over the declared variable list."""

    name = "grevlex"

    def key(self, expo):
        return (sum(expo), tuple(-e for e in expo))

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)


class BlockOrder:
    """Single eliminated variable (last slot) over an inner x-block order.

    Any monomial containing the eliminated variable beats every monomial
    free of it, which is what lets {G, h} serve as a Groebner basis of
    the extended ideal without recomputation.
    """

    name = "elim"

    def __init__(self, inner):
        self.inner = inner

    def key(self, expo):
        return (expo[-1], self.inner.key(expo[:-1]))

    def __eq__(self, other):
        return type(other) is type(self) and other.inner == self.inner

    def __hash__(self):
        return hash((self.name, self.inner))


ORDERS = {"lex": LexOrder, "grevlex": GrevlexOrder}


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Quotient monomial a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_cmp(a, b, order):
    """Total-order comparison: negative, zero or positive like C's strcmp."""
    if len(a) != len(b):
        raise ArityMismatch(f"monomials of arity {len(a)} and {len(b)}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class PolyRing:
    """Field, ordered variable list and monomial order."""

    def __init__(self, field, varnames, order):
        self.field = field
        self.varnames = tuple(varnames)
        self.order = order
        self.nvars = len(self.varnames)
        self._zero_mono = (0,) * self.nvars

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return MultiPoly(self, {self._zero_mono: self.field.one})

    def const(self, c):
        if c == self.field.zero:
            return self.zero()
        return MultiPoly(self, {self._zero_mono: c})

    def var(self, i):
        expo = [0] * self.nvars
        expo[i] = 1
        return MultiPoly(self, {tuple(expo): self.field.one})

    def monomial(self, expo, coeff=None):
        if coeff is None:
            coeff = self.field.one
        if coeff == self.field.zero:
            return self.zero()
        return MultiPoly(self, {tuple(expo): coeff})

    def from_terms(self, terms):
        return MultiPoly(self, {m: c for m, c in terms.items() if c != self.field.zero})

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.varnames == other.varnames and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.varnames, self.order))

    def __repr__(self):
        return f"PolyRing({self.field}, {self.varnames}, {self.order.name})"


class MultiPoly:
    """Immutable sparse polynomial: mapping from exponent tuple to coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.ring != other.ring:
            raise ArityMismatch(f"mixed rings {self.ring} and {other.ring}")

    def __add__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if s == F.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(self.ring, out)

    def __sub__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.sub(out.get(m, F.zero), c)
            if s == F.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return MultiPoly(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        F = self.ring.field
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = F.add(out.get(m, F.zero), F.mul(ca, cb))
                if s == F.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly(self.ring, out)

    def scale(self, c):
        F = self.ring.field
        if c == F.zero:
            return self.ring.zero()
        return MultiPoly(self.ring, {m: F.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, mono, coeff):
        F = self.ring.field
        if coeff == F.zero:
            return self.ring.zero()
        return MultiPoly(self.ring,
                         {mono_mul(m, mono): F.mul(c, coeff) for m, c in self.terms.items()})

    def __pow__(self, n):
        result = self.ring.one()
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = self.ring.order.key
        return max(self.terms, key=key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def degree_in(self, i):
        """Largest exponent of variable i; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def is_constant(self):
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring._zero_mono, self.ring.field.zero)

    def sorted_terms(self, reverse=True):
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def __repr__(self):
        from .printing import poly_to_str
        return f"MultiPoly({poly_to_str(self)})"


def embed(p, ring_xy):
    """Embed an x-polynomial into the extended ring (y exponent 0)."""
    pad = ring_xy.nvars - p.ring.nvars
    return MultiPoly(ring_xy, {m + (0,) * pad: c for m, c in p.terms.items()})


def split_by_last(p, ring_x):
    """Split a polynomial in the extended ring by powers of the last variable.

    Returns a dict  exponent of y -> polynomial in the x-ring.
    """
    parts = {}
    for m, c in p.terms.items():
        parts.setdefault(m[-1], {})[m[:-1]] = c
    return {e: MultiPoly(ring_x, t) for e, t in parts.items()}


def substitute_univariate(q, r, reduce_fn=None):
    """Evaluate the univariate q at the multivariate r by Horner's scheme.

    ``reduce_fn`` (when given) is applied after every Horner step, which
    keeps intermediate results reduced against a quotient presentation
    instead of letting powers of r expand freely.
    """
    ring = r.ring
    if q.is_zero:
        return ring.zero()
    acc = ring.const(q.coeffs[-1])
    for i in range(q.degree - 1, -1, -1):
        acc = acc * r + ring.const(q.coeffs[i])
        if reduce_fn is not None:
            acc = reduce_fn(acc)
    return acc
