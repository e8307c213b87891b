"""Dense univariate polynomials over a ground field.

Coefficients are stored lowest degree first with no trailing zeros;
the zero polynomial has an empty coefficient tuple.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .errors import DivisionByZeroPoly
from .fields import QQ


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == field.zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(n) for n in ints])

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

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __sub__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(F, [F.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        F = self.field
        return UniPoly(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        F = self.field
        if self.is_zero or other.is_zero:
            return UniPoly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == F.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UniPoly(F, out)

    def scale(self, c):
        F = self.field
        return UniPoly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, n):
        result = UniPoly.one(self.field)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        """Euclidean division: self = q*other + r with deg r < deg other."""
        F = self.field
        if other.is_zero:
            raise DivisionByZeroPoly("polynomial division by zero")
        if self.degree < other.degree:
            return UniPoly.zero(F), self
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quo = [F.zero] * (dq + 1)
        inv_lead = F.inv(other.lead)
        for k in range(dq, -1, -1):
            c = F.mul(rem[other.degree + k], inv_lead)
            quo[k] = c
            if c != F.zero:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] = F.sub(rem[j + k], F.mul(c, b))
        return UniPoly(F, quo), UniPoly(F, rem[:other.degree])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("exact_div with nonzero remainder")
        return q

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lead))

    def derivative(self):
        """Formal derivative; in characteristic p multiples of p vanish."""
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(F.from_int(i), self.coeffs[i]))
        return UniPoly(F, out)

    def eval(self, a):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def gcd(self, other):
        """Monic gcd; zero if both inputs are zero."""
        if self.is_zero:
            return other.monic()
        if other.is_zero:
            return self.monic()
        if self.field.characteristic == 0:
            return _gcd_rationals(self, other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, (a % b).monic()
        return a.monic()

    def lcm(self, other):
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.field)
        g = self.gcd(other)
        return (self * other).exact_div(g).monic()

    def is_squarefree(self):
        """gcd(f, f') = 1; a vanishing derivative of a nonconstant f fails."""
        if self.degree <= 0:
            return True
        d = self.derivative()
        if d.is_zero:
            return False
        return self.gcd(d).degree == 0

    def pow_mod(self, n, modulus):
        """self**n mod modulus by square and multiply."""
        result = UniPoly.one(self.field)
        base = self % modulus
        while n > 0:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == self.field.zero:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return "UniPoly(" + " + ".join(parts) + ")"


def _content_and_primitive(ints):
    c = 0
    for v in ints:
        c = int_gcd(c, v)
    if c == 0:
        return 0, ints
    return c, [v // c for v in ints]


def to_int_coeffs(f):
    """Clear denominators of a rational polynomial: returns primitive int list."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    _, prim = _content_and_primitive(ints)
    return prim


def _pseudo_rem(f, g):
    """Pseudo-remainder of integer coefficient lists (lowest degree first)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        lf = f[-1]
        f = [v * lg for v in f]
        for j in range(dg + 1):
            f[df - dg + j] -= lf * g[j]
        while f and f[-1] == 0:
            f.pop()
    return f

def _gcd_rationals(f, g):
    """Monic gcd over Q via primitive pseudo-remainders in Z[x].

    Splitting off integer content after every pseudo-division keeps the
    intermediate coefficients from the rational blow-up of naive Euclid.
    """
    a = to_int_coeffs(f)
    b = to_int_coeffs(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        _, r = _content_and_primitive(r)
        a, b = b, r
    return UniPoly(QQ, [Fraction(v) for v in a]).monic()
