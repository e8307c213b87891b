"""Dense exact linear algebra over the ground field.

Everything here runs on field elements only: Hessenberg reduction and
Gaussian elimination divide freely, and a division-free Berkowitz
routine is available where that matters.
"""

from .errors import NotSquare, Singular
from .multipoly import substitute_univariate
from .unipoly import UniPoly


class ExactMatrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows):
        rows = [list(r) for r in rows]
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zeros(cls, field, n, m):
        return cls(field, [[field.zero] * m for _ in range(n)])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.rows == other.rows)

    def transpose(self):
        return ExactMatrix(self.field,
                           [[self.rows[i][j] for i in range(self.nrows)]
                            for j in range(self.ncols)])

    def mat_vec(self, v):
        F = self.field
        out = []
        for row in self.rows:
            acc = F.zero
            for a, b in zip(row, v):
                if a != F.zero and b != F.zero:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field})"


def multiplication_matrix(r, qp):
    """Matrix of [g] -> [r*g] on the staircase basis of the quotient.

    Row i holds the coordinates of the reduced product r * B_i, so the
    basis column vector satisfies m_r(B) = M B.
    """
    ring = qp.ring
    if r.ring != ring:
        raise ValueError("r must live in the quotient's ambient ring")
    rows = []
    for mono in qp.staircase:
        prod = r.mul_term(mono, ring.field.one)
        rows.append(qp.coordinates(qp.reduce(prod)))
    return ExactMatrix(ring.field, rows)


def _hessenberg(M):
    """Similarity reduction to upper Hessenberg form, in place on a copy."""
    F = M.field
    n = M.nrows
    H = [row[:] for row in M.rows]
    for m in range(1, n - 1):
        # find a nonzero entry below the subdiagonal slot in column m-1
        pivot = None
        for i in range(m, n):
            if H[i][m - 1] != F.zero:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != m:
            H[pivot], H[m] = H[m], H[pivot]
            for row in H:
                row[pivot], row[m] = row[m], row[pivot]
        inv = F.inv(H[m][m - 1])
        for i in range(m + 1, n):
            t = H[i][m - 1]
            if t == F.zero:
                continue
            u = F.mul(t, inv)
            row_i, row_m = H[i], H[m]
            for j in range(m - 1, n):
                row_i[j] = F.sub(row_i[j], F.mul(u, row_m[j]))
            # similarity: add u times column i back onto column m
            for k in range(n):
                H[k][m] = F.add(H[k][m], F.mul(u, H[k][i]))
    return H


def char_poly(M, algorithm="hessenberg"):
    """Monic characteristic polynomial det(tI - M)."""
    if not M.is_square:
        raise NotSquare(f"{M.nrows}x{M.ncols} matrix")
    if algorithm == "berkowitz":
        return _char_poly_berkowitz(M)
    F = M.field
    n = M.nrows
    if n == 0:
        return UniPoly.one(F)
    H = _hessenberg(M)
    # p_k = (t - H[k-1][k-1]) p_{k-1} - sum over lower chains
    polys = [UniPoly.one(F)]
    for k in range(1, n + 1):
        t_minus = UniPoly(F, [F.neg(H[k - 1][k - 1]), F.one])
        p = t_minus * polys[k - 1]
        prod = F.one
        for i in range(1, k):
            prod = F.mul(prod, H[k - i][k - i - 1])
            if prod == F.zero:
                break
            coeff = F.mul(prod, H[k - i - 1][k - 1])
            if coeff != F.zero:
                p = p - polys[k - i - 1].scale(coeff)
        polys.append(p)
    return polys[n]


def _char_poly_berkowitz(M):
    """Division-free characteristic polynomial (Berkowitz clow sequences)."""
    F = M.field
    n = M.nrows
    if n == 0:
        return UniPoly.one(F)
    A = M.rows
    # vector of coefficients of det(tI - leading principal block), highest first
    vec = [F.one, F.neg(A[0][0])]
    for k in range(1, n):
        akk = A[k][k]
        row = A[k][:k]
        col = [A[i][k] for i in range(k)]
        # powers[j] = row . A_{k-1}^j . col  where A_{k-1} is the leading block
        powers = []
        cur = col
        for _ in range(k):
            acc = F.zero
            for a, b in zip(row, cur):
                acc = F.add(acc, F.mul(a, b))
            powers.append(acc)
            cur = [sum_row(F, A, i, cur, k) for i in range(k)]
        toep = [F.one, F.neg(akk)] + [F.neg(p) for p in powers]
        new = [F.zero] * (k + 2)
        for i in range(k + 2):
            acc = F.zero
            for j in range(min(i, len(vec) - 1) + 1):
                if i - j < len(toep):
                    acc = F.add(acc, F.mul(toep[i - j], vec[j]))
            new[i] = acc
        vec = new
    return UniPoly(F, list(reversed(vec)))


def sum_row(F, A, i, v, k):
    acc = F.zero
    row = A[i]
    for j in range(k):
        if v[j] != F.zero and row[j] != F.zero:
            acc = F.add(acc, F.mul(row[j], v[j]))
    return acc


def min_poly(M):
    """Least-degree monic annihilator, as the lcm of per-vector annihilators.

    Each standard basis vector seeds a Krylov chain; the chain's first
    linear dependence gives a local annihilator, and the lcm over all
    vectors is the minimal polynomial.  Deterministic by construction.
    """
    if not M.is_square:
        raise NotSquare(f"{M.nrows}x{M.ncols} matrix")
    F = M.field
    n = M.nrows
    if n == 0:
        return UniPoly.one(F)
    result = UniPoly.one(F)
    for start in range(n):
        v = [F.one if i == start else F.zero for i in range(n)]
        local = _local_annihilator(M, v)
        result = result.lcm(local)
        if result.degree == n:
            break
    return result


def _local_annihilator(M, v):
    F = M.field
    n = M.nrows
    echelon = []   # rows with pivot index, normalized pivot 1
    combos = []    # the same rows expressed in powers of M applied to v
    seq = v
    k = 0
    while True:
        rem = list(seq)
        comb = [F.zero] * k + [F.one]
        for (pivot, row), rc in zip(echelon, combos):
            c = rem[pivot]
            if c == F.zero:
                continue
            for j in range(n):
                rem[j] = F.sub(rem[j], F.mul(c, row[j]))
            for j in range(len(rc)):
                if j < len(comb):
                    comb[j] = F.sub(comb[j], F.mul(c, rc[j]))
                else:
                    comb.append(F.neg(F.mul(c, rc[j])))
        pivot = next((i for i, a in enumerate(rem) if a != F.zero), None)
        if pivot is None:
            return UniPoly(F, comb)
        inv = F.inv(rem[pivot])
        echelon.append((pivot, [F.mul(inv, a) for a in rem]))
        combos.append([F.mul(inv, a) for a in comb])
        seq = M.mat_vec(seq)
        k += 1


def solve(M, b):
    """Solve M x = b exactly; a singular M raises with a kernel witness."""
    if not M.is_square:
        raise NotSquare(f"{M.nrows}x{M.ncols} matrix")
    F = M.field
    n = M.nrows
    aug = [row[:] + [bv] for row, bv in zip(M.rows, b)]
    pivots = []        # (row, col) in elimination order
    pivot_rows = set()
    for col in range(n):
        pr = None
        for i in range(n):
            if i in pivot_rows:
                continue
            if aug[i][col] != F.zero:
                pr = i
                break
        if pr is None:
            raise Singular(_kernel_vector(F, n, aug, pivots, col))
        inv = F.inv(aug[pr][col])
        aug[pr] = [F.mul(inv, a) for a in aug[pr]]
        for i in range(n):
            if i == pr:
                continue
            c = aug[i][col]
            if c == F.zero:
                continue
            aug[i] = [F.sub(a, F.mul(c, p)) for a, p in zip(aug[i], aug[pr])]
        pivots.append((pr, col))
        pivot_rows.add(pr)
    x = [F.zero] * n
    for pr, col in pivots:
        x[col] = aug[pr][n]
    return x


def _kernel_vector(F, n, aug, pivots, free_col):
    """Nonzero kernel vector from the eliminated tableau at a pivotless column."""
    v = [F.zero] * n
    v[free_col] = F.one
    for pr, col in pivots:
        v[col] = F.neg(aug[pr][free_col])
    return v
