"""Exact coefficient arithmetic over the ground field.

Elements are plain Python values: ``fractions.Fraction`` over Q and
canonical ``int`` residues in [0, p) over GF(p).  A field object
supplies the operations so that polynomial and matrix code stays
generic over both.
"""

from fractions import Fraction

from .errors import BadModulus, ZeroInversion

MACHINE_WORD_LIMIT = 1 << 64


def xgcd(a, b):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all n < 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rational numbers with exact Fraction arithmetic."""

    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroInversion("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroInversion("division by zero in Q")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, fr):
        return Fraction(fr)

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


class PrimeField:
    """GF(p) for a machine-word prime p, residues stored in [0, p).

    Compositeness may also surface lazily: inversion raises BadModulus
    the moment the extended gcd exposes a nontrivial factor of p.
    """

    def __init__(self, p):
        if not isinstance(p, int) or p < 2:
            raise BadModulus(f"modulus must be an integer >= 2, got {p!r}")
        if p >= MACHINE_WORD_LIMIT:
            raise BadModulus(f"modulus {p} exceeds the machine-word limit 2^64")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        c = a + b
        return c - self.p if c >= self.p else c

    def sub(self, a, b):
        c = a - b
        return c + self.p if c < 0 else c

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return self.p - a if a else 0

    def inv(self, a):
        if a == 0:
            raise ZeroInversion(f"division by zero in GF({self.p})")
        g, s, _ = xgcd(a, self.p)
        if g != 1:
            raise BadModulus(f"modulus {self.p} is not prime (divisor {g} found)")
        return s % self.p

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, fr):
        num, den = fr.numerator, fr.denominator
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p):
    return PrimeField(p)
