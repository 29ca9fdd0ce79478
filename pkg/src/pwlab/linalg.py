"""Exact dense linear algebra over the rationals.

Matrices are plain lists of rows; entries are anything ``Fraction`` accepts.
Subspaces are stored by their reduced row-echelon basis, so two subspaces are
equal exactly when their stored bases are equal.
"""

from fractions import Fraction
from math import lcm


class DimensionMismatch(ValueError):
    pass


def as_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def zeros(nrows, ncols):
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m, ncols=None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b, inner=None):
    """Product ``a @ b``; ``inner`` gives the shared dimension when ``a`` has no rows."""
    if not a:
        return []
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * n
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(n):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(m, v):
    out = []
    for row in m:
        s = Fraction(0)
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return out


def rref(m, ncols=None):
    """Reduced row-echelon form.

    Returns ``(rank, echelon, pivots)`` where ``echelon`` holds only the
    nonzero rows and ``pivots`` their pivot columns.
    """
    rows = [[Fraction(x) for x in row] for row in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = rows[r] = [x * inv for x in prow]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return r, rows[:r], pivots


def rank(m, ncols=None):
    return rref(m, ncols)[0]


def fraction_free_rank(m):
    """Rank by Bareiss elimination on integers (rows are scaled to clear denominators)."""
    rows = []
    for row in m:
        row = [Fraction(x) for x in row]
        den = lcm(*[x.denominator for x in row]) if row else 1
        rows.append([int(x * den) for x in row])
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, len(rows)):
            rows[i] = [(rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) // prev
                       for j in range(ncols)]
        prev = rows[r][c]
        r += 1
        if r == len(rows):
            break
    return r


class Subspace:
    """A subspace of Q^n held as its canonical reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        _, ech, piv = rref(vectors, ambient_dim)
        self.basis = tuple(tuple(row) for row in ech)
        self.pivots = tuple(piv)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def full(cls, n):
        return cls(n, identity(n))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return subspace_equal(self, other)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce(self, v):
        """Residue of ``v`` after clearing the pivot columns."""
        v = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        v[j] -= f * x
        return v

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return not any(self.reduce(v))

    def coordinates(self, v):
        """Coefficients of ``v`` in the echelon basis; None if ``v`` is not in the span."""
        if any(self.reduce(v)):
            return None
        return [Fraction(v[p]) for p in self.pivots]

    def __add__(self, other):
        _check_same(self, other)
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def __contains__(self, v):
        return self.contains(v)

    def issubset(self, other):
        _check_same(self, other)
        return all(other.contains(v) for v in self.basis)

    def annihilator(self):
        return kernel_basis(self.basis, self.ambient_dim)

    def image(self, m):
        """Image of this subspace under the matrix ``m`` (acting on column vectors)."""
        nrows = len(m)
        return Subspace(nrows, [matvec(m, v) for v in self.basis])


def _check_same(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")


def kernel_basis(m, ncols=None):
    """The subspace {v : m v = 0}."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    _, ech, piv = rref(m, ncols)
    pivset = set(piv)
    vectors = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(ech, piv):
            v[p] = -row[free]
        vectors.append(v)
    return Subspace(ncols, vectors)


def subspace_intersect(*subspaces):
    if not subspaces:
        raise ValueError("need at least one subspace")
    n = subspaces[0].ambient_dim
    for s in subspaces[1:]:
        _check_same(subspaces[0], s)
    constraints = []
    for s in subspaces:
        constraints.extend(s.annihilator().basis)
    return kernel_basis(constraints, n)


def subspace_equal(a, b):
    _check_same(a, b)
    return a.basis == b.basis


def solve(m, rhs, ncols=None):
    """One solution x of ``m x = rhs`` (free variables set to zero), or None."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    aug = [list(row) + [Fraction(b)] for row, b in zip(m, rhs)]
    _, ech, piv = rref(aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(ech, piv):
        x[p] = row[ncols]
    return x


def inverse(m):
    n = len(m)
    aug = [list(row) + e for row, e in zip(m, identity(n))]
    r, ech, piv = rref(aug, 2 * n)
    if r < n or piv[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return [row[n:] for row in ech]


def format_rational(x):
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    return Fraction(s)
