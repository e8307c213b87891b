"""Arithmetic in the extension field K = k[x1..xn]/I and in K[y].

Elements are canonical normal-form representatives; no primitive
element is ever computed.  Inversion solves a linear system against
the multiplication matrix on I's staircase, and a singular solve is a
constructive proof that I was not maximal.
"""

from .errors import (InseparableInput, NotMaximalIdeal, Singular,
                     ZeroInversion)
from .linalg import ExactMatrix, solve
from .multipoly import (BlockOrder, MultiPoly, PolyRing, embed,
                        split_by_last, substitute_univariate)
from .reduction import GroebnerBasis, normal_form, staircase


class Extension:
    """Context for K: the ideal's basis, staircase and cached inverses."""

    def __init__(self, gb_I, yname="y"):
        self.gb = gb_I
        self.ring = gb_I.ring
        self.field = self.ring.field
        self.x_staircase = tuple(staircase(gb_I))
        if not self.x_staircase:
            raise NotMaximalIdeal(message="ideal is the unit ideal, not maximal")
        self.dim = len(self.x_staircase)
        self.index = {m: i for i, m in enumerate(self.x_staircase)}
        if yname in self.ring.varnames:
            raise ValueError(f"variable name {yname!r} already taken")
        self.yname = yname
        self.ring_xy = PolyRing(self.field, self.ring.varnames + (yname,),
                                BlockOrder(self.ring.order))
        self._inv_cache = {}

    def element(self, poly):
        """Canonical element of K from any x-polynomial."""
        return ExtElement(self, normal_form(poly, self.gb))

    def from_const(self, c):
        return ExtElement(self, self.ring.const(c))

    def zero(self):
        return self.from_const(self.field.zero)

    def one(self):
        return self.from_const(self.field.one)

    def alpha(self, i):
        """The class of the i-th variable."""
        return self.element(self.ring.var(i))

    def coordinates(self, a):
        F = self.field
        vec = [F.zero] * self.dim
        for m, c in a.rep.terms.items():
            vec[self.index[m]] = c
        return vec

    def from_coordinates(self, vec):
        F = self.field
        terms = {m: c for m, c in zip(self.x_staircase, vec) if c != F.zero}
        return ExtElement(self, MultiPoly(self.ring, terms))

    def mult_matrix(self, a):
        """Matrix of multiplication by a on the staircase of I."""
        rows = []
        for mono in self.x_staircase:
            prod = a.rep.mul_term(mono, self.field.one)
            red = normal_form(prod, self.gb)
            rows.append(self.coordinates(ExtElement(self, red)))
        return ExactMatrix(self.field, rows)

    def inv(self, a):
        """Inverse in K; failure yields a zero-divisor witness against maximality."""
        if a.is_zero:
            raise ZeroInversion("inversion of zero in the extension field")
        key = tuple(sorted(a.rep.terms.items()))
        hit = self._inv_cache.get(key)
        if hit is not None:
            return hit
        F = self.field
        m = self.mult_matrix(a).transpose()
        e0 = [F.one] + [F.zero] * (self.dim - 1)
        try:
            vec = solve(m, e0)
        except Singular as exc:
            witness = self.from_coordinates(exc.kernel)
            lc = witness.rep.leading_coeff()
            if lc != F.one:
                witness = witness.scale(F.inv(lc))
            raise NotMaximalIdeal(witness=witness) from None
        out = self.from_coordinates(vec)
        self._inv_cache[key] = out
        return out

    def __eq__(self, other):
        return isinstance(other, Extension) and other.gb is self.gb

    def __hash__(self):
        return hash(id(self.gb))


class ExtElement:
    """An element of K, held as its normal-form representative."""

    __slots__ = ("ext", "rep")

    def __init__(self, ext, rep):
        self.ext = ext
        self.rep = rep

    @property
    def is_zero(self):
        return self.rep.is_zero

    def is_one(self):
        return self.rep == self.ext.ring.one()

    def __add__(self, other):
        return ExtElement(self.ext, self.rep + other.rep)

    def __sub__(self, other):
        return ExtElement(self.ext, self.rep - other.rep)

    def __neg__(self):
        return ExtElement(self.ext, -self.rep)

    def __mul__(self, other):
        return self.ext.element(self.rep * other.rep)

    def scale(self, c):
        return ExtElement(self.ext, self.rep.scale(c))

    def inv(self):
        return self.ext.inv(self)

    def __eq__(self, other):
        return isinstance(other, ExtElement) and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def sort_key(self):
        key = self.ext.ring.order.key
        return tuple(sorted(((key(m), _coeff_key(c)) for m, c in self.rep.terms.items()),
                            reverse=True))

    def __repr__(self):
        from .printing import poly_to_str
        return f"ExtElement({poly_to_str(self.rep)})"


def _coeff_key(c):
    if hasattr(c, "numerator"):
        return (c.numerator, c.denominator)
    return (c,)


class ExtPoly:
    """Element of K[y]: dense coefficient list in y-degree order."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.ext = ext
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ext):
        return cls(ext, ())

    @classmethod
    def one(cls, ext):
        return cls(ext, (ext.one(),))

    @classmethod
    def y(cls, ext):
        return cls(ext, (ext.zero(), ext.one()))

    @classmethod
    def from_elements(cls, ext, elems):
        return cls(ext, elems)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ext.zero()

    def __eq__(self, other):
        return (isinstance(other, ExtPoly) and self.ext == other.ext
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return ExtPoly(self.ext, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return ExtPoly(self.ext, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return ExtPoly(self.ext, [-c for c in self.coeffs])

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return ExtPoly.zero(self.ext)
        zero = self.ext.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return ExtPoly(self.ext, out)

    def scale_elem(self, c):
        return ExtPoly(self.ext, [a * c for a in self.coeffs])

    def __pow__(self, n):
        result = ExtPoly.one(self.ext)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if self.is_zero:
            return self
        if self.lead.is_one():
            return self
        return self.scale_elem(self.ext.inv(self.lead))

    def divmod(self, other):
        """Euclidean division in K[y]; inverts the divisor's leading coefficient."""
        if other.is_zero:
            from .errors import DivisionByZeroPoly
            raise DivisionByZeroPoly("division by zero in K[y]")
        ext = self.ext
        if self.degree < other.degree:
            return ExtPoly.zero(ext), self
        inv_lead = ext.inv(other.lead)
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quo = [ext.zero()] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[other.degree + k] * inv_lead
            quo[k] = c
            if not c.is_zero:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] = rem[j + k] - c * b
        return ExtPoly(ext, quo), ExtPoly(ext, rem[:other.degree])

    def __divmod__(self, other):
        return self.divmod(other)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("exact_div with nonzero remainder in K[y]")
        return q

    def divides(self, other):
        if self.is_zero:
            return other.is_zero
        return other.divmod(self)[1].is_zero

    def derivative(self):
        ext = self.ext
        F = ext.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i].scale(F.from_int(i)))
        return ExtPoly(ext, out)

    def gcd(self, other):
        """Monic Euclidean gcd, renormalizing after every remainder step."""
        a, b = self.monic() if not self.is_zero else self, other
        if a.is_zero:
            return b.monic()
        if b.is_zero:
            return a.monic()
        b = b.monic()
        while not b.is_zero:
            r = a % b
            a, b = b, (r.monic() if not r.is_zero else r)
        return a

    def sort_key(self):
        return (self.degree,
                tuple(c.sort_key() for c in reversed(self.coeffs)))

    def __repr__(self):
        from .printing import extpoly_to_str
        return f"ExtPoly({extpoly_to_str(self)})"


def sigma(h, ext):
    """Coefficient-wise projection of a lift in R_y down to K[y]."""
    if h.ring != ext.ring_xy:
        raise ValueError("sigma expects a polynomial in the extended ring")
    parts = split_by_last(h, ext.ring)
    if not parts:
        return ExtPoly.zero(ext)
    top = max(parts)
    coeffs = []
    for i in range(top + 1):
        p = parts.get(i)
        coeffs.append(ext.element(p) if p is not None else ext.zero())
    return ExtPoly(ext, coeffs)


def natural_lift(f):
    """Lift of f in R_y obtained by rewriting each alpha_i as x_i."""
    ext = f.ext
    ring_xy = ext.ring_xy
    out = ring_xy.zero()
    for i, c in enumerate(f.coeffs):
        if c.is_zero:
            continue
        lifted = embed(c.rep, ring_xy)
        ymono = (0,) * ext.ring.nvars + (i,)
        out = out + lifted.mul_term(ymono, ext.field.one)
    return out


def ext_inv(a, ext):
    return ext.inv(a)


def extpoly_gcd(f, g):
    return f.gcd(g)


def _pth_root(f):
    """p-th root of a polynomial that is a p-th power in K[y].

    K is perfect: coefficient roots are c**(|K|/p) with |K| = p**e.
    """
    ext = f.ext
    p = ext.field.characteristic
    e = ext.dim
    exp = p ** (e - 1)
    coeffs = []
    for i in range(0, f.degree + 1, p):
        c = f.coeff(i)
        coeffs.append(_ext_pow(c, exp))
    return ExtPoly(ext, coeffs)


def _ext_pow(a, n):
    result = a.ext.one()
    base = a
    while n > 0:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def squarefree_part(f):
    """Monic squarefree polynomial with the same distinct roots as f.

    Characteristic 0 is the plain f / gcd(f, f'); in characteristic p
    a vanishing derivative is rejected as inseparable input, while
    factors of multiplicity divisible by p are recovered through p-th
    root descent (K is perfect).
    """
    if f.degree < 1:
        raise ValueError("squarefree part of a constant")
    ext = f.ext
    f = f.monic()
    d = f.derivative()
    if ext.field.characteristic == 0:
        if d.is_zero:
            return f  # degree >= 1 over Q always has nonzero derivative
        return f.exact_div(f.gcd(d)).monic()
    if d.is_zero:
        raise InseparableInput(
            "derivative vanished in characteristic p; input rejected as inseparable")
    w = f.exact_div(f.gcd(d)).monic()
    # strip every factor collected in w, leaving the p-th power part
    g = f
    while True:
        c = g.gcd(w)
        if c.degree == 0:
            break
        g = g.exact_div(c).monic()
    if g.degree == 0:
        return w
    return (w * squarefree_part(_pth_root(g))).monic()


def multiplicity_of(f, g):
    """Multiplicity of the factor g in f by repeated exact trial division."""
    count = 0
    while True:
        q, r = f.divmod(g)
        if not r.is_zero:
            return count, f
        f = q
        count += 1
