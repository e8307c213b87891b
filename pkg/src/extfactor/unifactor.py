"""Complete univariate factorization over the ground field.

Over GF(p): squarefree decomposition with p-th root descent, then
distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
splitting (trace maps for p = 2).  Over Q: Yun decomposition, then
Zassenhaus -- factor modulo a good prime, Hensel-lift past the
coefficient bound, recombine subsets with early divisibility exits.

The Hensel machinery works on plain integer coefficient lists (lowest
degree first), independent of the field-element layer.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .fields import QQ, is_prime
from .unipoly import UniPoly, to_int_coeffs


@dataclass
class UniFactorization:
    """unit * product(poly_i ** mult_i) reconstructs the input exactly."""

    unit: object
    factors: list  # (monic UniPoly, multiplicity)

    def reconstruct(self, field):
        out = UniPoly.const(field, self.unit)
        for poly, mult in self.factors:
            out = out * poly ** mult
        return out


def _coeff_key(c):
    if hasattr(c, "numerator"):
        return (c.numerator, c.denominator)
    return (c,)


def unipoly_sort_key(f):
    return (f.degree, tuple(_coeff_key(c) for c in reversed(f.coeffs)))


def _sorted_factors(pairs):
    return sorted(pairs, key=lambda t: (t[1], unipoly_sort_key(t[0])))


# ---------------------------------------------------------------------------
# squarefree decomposition


def squarefree_decompose(f):
    """Pairwise-coprime squarefree parts with their multiplicities.

    f = lc(f) * product(part_i ** mult_i).  Over GF(p) a vanishing
    derivative triggers p-th root descent (the field is perfect), so
    inputs like t**p factor to [(t, p)].
    """
    if f.is_zero:
        raise ValueError("squarefree decomposition of zero")
    f = f.monic()
    if f.degree < 1:
        return []
    if f.field.characteristic == 0:
        return _sorted_factors(_yun(f))
    return _sorted_factors(_squarefree_p(f))


def _yun(f):
    d = f.derivative()
    g = f.gcd(d)
    if g.degree == 0:
        return [(f, 1)]
    u = f.exact_div(g)
    z = d.exact_div(g) - u.derivative()
    out = []
    i = 1
    while u.degree > 0:
        h = u.gcd(z)
        if h.degree > 0:
            out.append((h, i))
            u = u.exact_div(h).monic()
        z = z.exact_div(h) - u.derivative()
        i += 1
    return out


def _pth_root_coeffs(f):
    """p-th root over the prime field: Frobenius fixes GF(p) pointwise."""
    p = f.field.characteristic
    return UniPoly(f.field, [f[i] for i in range(0, f.degree + 1, p)])


def _squarefree_p(f):
    p = f.field.characteristic
    d = f.derivative()
    if d.is_zero:
        root = _pth_root_coeffs(f)
        return [(g, p * m) for g, m in _squarefree_p(root.monic())]
    out = []
    c = f.gcd(d)
    w = f.exact_div(c).monic()
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        fac = w.exact_div(y).monic()
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c.exact_div(y).monic()
        i += 1
    if c.degree > 0:
        root = _pth_root_coeffs(c)
        out.extend((g, p * m) for g, m in _squarefree_p(root.monic()))
    return out


# ---------------------------------------------------------------------------
# factorization over GF(p)


def factor_Fp(f, rng=None):
    """Irreducible factorization of a squarefree polynomial over GF(p)."""
    if rng is None:
        rng = random.Random(0)
    unit = f.lead
    fm = f.monic()
    out = []
    for part, deg in _distinct_degree(fm):
        for irr in _equal_degree(part, deg, rng):
            out.append((irr, 1))
    return UniFactorization(unit, _sorted_factors(out))


def _distinct_degree(f):
    """Split a monic squarefree f into products of equal-degree irreducibles."""
    field = f.field
    p = field.characteristic
    out = []
    x = UniPoly.x(field)
    h = x % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f.exact_div(g).monic()
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree(f, d, rng):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    field = f.field
    p = field.characteristic
    one = UniPoly.one(field)
    while True:
        h = UniPoly(field, [rng.randrange(p) for _ in range(f.degree)])
        if h.degree < 1:
            continue
        g = f.gcd(h)
        if 0 < g.degree < f.degree:
            break
        if p == 2:
            # trace map of h over the degree-d subfield
            t = h % f
            acc = t
            for _ in range(d - 1):
                t = t.pow_mod(2, f)
                acc = (acc + t) % f
            g = f.gcd(acc)
        else:
            e = (p ** d - 1) // 2
            g = f.gcd(h.pow_mod(e, f) - one)
        if 0 < g.degree < f.degree:
            break
    left = g.monic()
    right = f.exact_div(left).monic()
    return _equal_degree(left, d, rng) + _equal_degree(right, d, rng)


# ---------------------------------------------------------------------------
# factorization over Q (Zassenhaus)


def factor_Q(f, rng=None):
    """Complete irreducible factorization over Q.

    Factors are monic; the unit carries the leading coefficient (and
    thereby any cleared content).
    """
    if f.is_zero:
        raise ValueError("factorization of zero")
    if rng is None:
        rng = random.Random(0)
    unit = f.lead
    fm = f.monic()
    if fm.degree < 1:
        return UniFactorization(unit, [])
    out = []
    for part, mult in squarefree_decompose(fm):
        for q in _factor_sqf_Q(part, rng):
            out.append((q, mult))
    return UniFactorization(unit, _sorted_factors(out))


def _factor_sqf_Q(f, rng):
    """Monic irreducible factors of a monic squarefree rational polynomial."""
    if f.degree == 1:
        return [f]
    factors = []
    if f[0] == f.field.zero:
        x = UniPoly.x(f.field)
        factors.append(x)
        f = f.exact_div(x)
        if f.degree == 1:
            return factors + [f]
    ints = to_int_coeffs(f)
    if ints[-1] < 0:
        ints = [-c for c in ints]
    for g in _zassenhaus(ints, rng):
        factors.append(UniPoly(QQ, [Fraction(c) for c in g]).monic())
    return factors


def _reduce_mod_good_prime(ints, p):
    """Monic image of f mod p when f stays squarefree there, else None."""
    field = _gf(p)
    fp = UniPoly.from_ints(field, ints)
    if fp.degree != len(ints) - 1:
        return None
    fpm = fp.monic()
    d = fpm.derivative()
    if d.is_zero or fpm.gcd(d).degree != 0:
        return None
    return fpm


_GF_CACHE = {}


def _gf(p):
    if p not in _GF_CACHE:
        from .fields import GF
        _GF_CACHE[p] = GF(p)
    return _GF_CACHE[p]


def _zassenhaus(f, rng):
    """Primitive squarefree f in Z[x] with positive leading coefficient."""
    n = len(f) - 1
    if n == 1:
        return [f]
    lc = f[-1]
    A = max(abs(c) for c in f)
    # Mignotte-style bound on coefficients of b * (any monic rational factor)
    B = (math.isqrt(n + 1) + 1) * (1 << n) * A * abs(lc)

    # scan small odd primes keeping f squarefree; among the first few
    # admissible ones prefer the one yielding the fewest modular factors
    candidates = []
    p = 3
    while True:
        if is_prime(p) and lc % p != 0:
            fpm = _reduce_mod_good_prime(f, p)
            if fpm is not None:
                parts = factor_Fp(fpm, rng).factors
                candidates.append((len(parts), p, [g for g, _ in parts]))
                if len(parts) <= 3 or len(candidates) >= 5:
                    break
        p += 2
    _, p, modular = min(candidates, key=lambda t: (t[0], t[1]))

    if len(modular) == 1:
        return [f]

    l = 1
    pl = p
    while pl <= 2 * B:
        pl *= p
        l += 1

    lifted = _hensel_lift(p, f, [_gf_to_ints(g) for g in modular], l)
    return _recombine(f, lifted, p ** l)


def _gf_to_ints(g):
    return list(g.coeffs)


def _sym(c, m):
    c %= m
    if c > m // 2:
        c -= m
    return c


def _trunc_sym(a, m):
    out = [_sym(c, m) for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _zadd(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zsub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zdivmod_monic(a, b):
    """Division by a monic integer polynomial; exact synthetic division."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    quo = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[db + k]
        quo[k] = c
        if c:
            for j in range(db + 1):
                a[j + k] -= c * b[j]
    rem = a[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def _hensel_step(m, f, g, h, s, t):
    """Quadratic lift of f = g*h, s*g + t*h = 1 from mod m to mod m**2."""
    M = m * m
    e = _trunc_sym(_zsub(f, _zmul(g, h)), M)
    q, r = _zdivmod_monic(_zmul(s, e), h)
    q = _trunc_sym(q, M)
    r = _trunc_sym(r, M)
    u = _zadd(_zmul(t, e), _zmul(q, g))
    G = _trunc_sym(_zadd(g, u), M)
    H = _trunc_sym(_zadd(h, r), M)
    u = _zadd(_zmul(s, G), _zmul(t, H))
    b = _trunc_sym(_zsub(u, [1]), M)
    c, d = _zdivmod_monic(_zmul(s, b), H)
    c = _trunc_sym(c, M)
    d = _trunc_sym(d, M)
    u = _zadd(_zmul(t, b), _zmul(c, G))
    S = _trunc_sym(_zsub(s, d), M)
    T = _trunc_sym(_zsub(t, u), M)
    return G, H, S, T


def _hensel_lift(p, f, f_list, l):
    """Lift a coprime monic factorization of f mod p to mod p**l.

    Returns monic integer polynomials F_i with
    f = lc(f) * F_1 * ... * F_r  (mod p**l), F_i = f_i (mod p).
    """
    r = len(f_list)
    lc = f[-1]
    pl = p ** l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_trunc_sym([c * inv for c in f], pl)]

    m = p
    k = r // 2
    d = math.ceil(math.log2(l)) if l > 1 else 1

    field = _gf(p)
    g = UniPoly.const(field, field.from_int(lc))
    for fi in f_list[:k]:
        g = g * UniPoly.from_ints(field, fi)
    h = UniPoly.from_ints(field, f_list[k])
    for fi in f_list[k + 1:]:
        h = h * UniPoly.from_ints(field, fi)
    s, t, _ = _gcdex(g, h)

    g = _trunc_sym(_gf_to_ints(g), p)
    h = _trunc_sym(_gf_to_ints(h), p)
    s = _trunc_sym(_gf_to_ints(s), p)
    t = _trunc_sym(_gf_to_ints(t), p)

    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m

    return _hensel_lift(p, g, f_list[:k], l) + _hensel_lift(p, h, f_list[k:], l)


def _gcdex(a, b):
    """Extended Euclid in GF(p)[x]: s*a + t*b = g with g monic."""
    field = a.field
    s0, s1 = UniPoly.one(field), UniPoly.zero(field)
    t0, t1 = UniPoly.zero(field), UniPoly.one(field)
    while not b.is_zero:
        q, r = a.divmod(b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a.is_zero:
        return s0, t0, a
    inv = field.inv(a.lead)
    return s0.scale(inv), t0.scale(inv), a.monic()


def _recombine(f, lifted, pl):
    """Subset recombination over the lifted modular factors.

    Subsets are tried in increasing cardinality; a candidate is accepted
    only when its primitive part exactly divides what is left of f.
    """
    factors = []
    indices = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(indices):
        found = True
        while found:
            found = False
            for subset in combinations(indices, s):
                cand = [f[-1]]
                for i in subset:
                    cand = _zmul(cand, lifted[i])
                cand = _trunc_sym(cand, pl)
                cand = _primitive(cand)
                if cand[0] != 0 and f[0] % cand[0] != 0:
                    continue
                quo, rem = _zdivmod_lead(f, cand)
                if rem is None:
                    continue
                factors.append(cand)
                f = quo
                indices = [i for i in indices if i not in subset]
                found = True
                break
            if 2 * s > len(indices):
                break
        s += 1
    if len(f) - 1 > 0:
        factors.append(_primitive(f))
    return factors


def _primitive(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return list(a)
    out = [c // g for c in a]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def _zdivmod_lead(a, b):
    """Exact division test in Z[x]; returns (quotient, []) or (None, None)."""
    a = list(a)
    db = len(b) - 1
    da = len(a) - 1
    if da < db or not b:
        return None, None
    lb = b[-1]
    quo = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[db + k]
        if c % lb != 0:
            return None, None
        c //= lb
        quo[k] = c
        if c:
            for j in range(db + 1):
                a[j + k] -= c * b[j]
    if any(v != 0 for v in a[:db]):
        return None, None
    return quo, []


# ---------------------------------------------------------------------------
# general entry point


def factor_poly(f, rng=None):
    """Factor any nonzero univariate polynomial over its ground field."""
    if f.field.characteristic == 0:
        return factor_Q(f, rng)
    if rng is None:
        rng = random.Random(0)
    unit = f.lead
    out = []
    for part, mult in squarefree_decompose(f):
        for q, _ in factor_Fp(part, rng).factors:
            out.append((q, mult))
    return UniFactorization(unit, _sorted_factors(out))
