"""Exterior algebra on generators psi_1..psi_n and its symplectic decomposition.

A basis monomial is a sorted tuple of generator indices (1-based).  For the
symplectic setting n = 2g and gamma = -2 * sum_i psi_i psi_{i+g}.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .linalg import Subspace, inverse, kernel_basis, matvec, format_rational

# cohomological degree / weight of the generators
PSI_DEGREE, PSI_WEIGHT = 3, 2
GAMMA_DEGREE, GAMMA_WEIGHT = 6, 4


class ExteriorElement:
    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {}
        for key, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                key = tuple(key)
                if any(i < 1 or i > n for i in key) or list(key) != sorted(set(key)):
                    raise ValueError(f"bad monomial {key} for {n} generators")
                self.coeffs[key] = self.coeffs.get(key, 0) + c
        self.coeffs = {k: c for k, c in self.coeffs.items() if c}

    @property
    def g(self):
        return self.n // 2

    @classmethod
    def one(cls, n):
        return cls(n, {(): 1})

    @classmethod
    def generator(cls, n, i):
        return cls(n, {(i,): 1})

    def degrees(self):
        return {len(k) for k in self.coeffs}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"exterior algebras on {self.n} and {other.n} generators")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return ExteriorElement(self.n, out)

    def __neg__(self):
        return ExteriorElement(self.n, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ExteriorElement(self.n, {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = scale

    def __xor__(self, other):
        return wedge(self, other)

    def power(self, e):
        out = ExteriorElement.one(self.n)
        for _ in range(e):
            out = wedge(out, self)
        return out

    def vector(self, k):
        """Coordinates in the degree-k monomial basis."""
        index = monomial_index(self.n, k)
        v = [Fraction(0)] * len(index)
        for key, c in self.coeffs.items():
            if len(key) != k:
                raise ValueError("element has components outside degree k")
            v[index[key]] = c
        return v

    @classmethod
    def from_vector(cls, n, k, v):
        return cls(n, {key: c for key, c in zip(monomials(n, k), v) if c})

    def to_json(self):
        return [{"subset": list(k), "coeff": format_rational(c)}
                for k, c in sorted(self.coeffs.items())]

    @classmethod
    def from_json(cls, n, records):
        return cls(n, {tuple(r["subset"]): Fraction(r["coeff"]) for r in records})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in sorted(self.coeffs.items()):
            mono = "".join(f"psi{i}" for i in k) or "1"
            terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms)


def merge_sign(a, b):
    """Sign of the shuffle sorting the concatenation a+b (both sorted)."""
    inversions = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    return -1 if inversions % 2 else 1


def wedge(a, b):
    a._check(b)
    out = {}
    for ka, ca in a.coeffs.items():
        sa = set(ka)
        for kb, cb in b.coeffs.items():
            if sa.intersection(kb):
                continue
            key = tuple(sorted(ka + kb))
            out[key] = out.get(key, 0) + merge_sign(ka, kb) * ca * cb
    return ExteriorElement(a.n, out)


@lru_cache(maxsize=None)
def monomials(n, k):
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def monomial_index(n, k):
    return {m: i for i, m in enumerate(monomials(n, k))}


def gamma_element(g):
    if g < 1:
        raise ValueError("gamma needs g >= 1")
    return ExteriorElement(2 * g, {(i, i + g): -2 for i in range(1, g + 1)})


def wedge_matrix(left, k):
    """Matrix of ``x -> left ^ x`` from degree k to degree k + deg(left)."""
    n = left.n
    l = left.degree() or 0
    if k + l > n:
        return []
    target = monomial_index(n, k + l)
    cols = monomials(n, k)
    m = [[Fraction(0)] * len(cols) for _ in range(len(target))]
    for j, mono in enumerate(cols):
        prod = wedge(left, ExteriorElement(n, {mono: 1}))
        for key, c in prod.coeffs.items():
            m[target[key]][j] = c
    return m


@lru_cache(maxsize=None)
def _gamma_power(g, e):
    return gamma_element(g).power(e)


def lambda0_dim(g, k):
    if k < 0 or k > g:
        return 0
    return comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)


@lru_cache(maxsize=None)
def lambda0_basis(g, k):
    """Basis of the primitive part: kernel of gamma^(g+1-k) on the degree-k piece."""
    if k < 0 or k > g:
        return ()
    n = 2 * g
    m = wedge_matrix(_gamma_power(g, g + 1 - k), k)
    ker = kernel_basis(m, comb(n, k)) if m else Subspace.full(comb(n, k))
    return tuple(ExteriorElement.from_vector(n, k, v) for v in ker.basis)


@lru_cache(maxsize=None)
def _decomposition_data(g, k):
    # columns: gamma^i ^ b for b in the primitive basis of degree k - 2i
    n = 2 * g
    blocks = []
    cols = []
    # gamma^i kills the primitives of degree k - 2i once i > g - (k - 2i)
    for i in range(max(0, k - g), k // 2 + 1):
        basis = lambda0_basis(g, k - 2 * i)
        if not basis:
            continue
        gi = _gamma_power(g, i)
        blocks.append((i, len(basis)))
        for b in basis:
            cols.append(wedge(gi, b).vector(k))
    size = comb(n, k)
    if len(cols) != size:
        raise ArithmeticError(f"decomposition of degree {k} has {len(cols)} columns, need {size}")
    mat = [[cols[j][i] for j in range(size)] for i in range(size)]
    return tuple(blocks), inverse(mat) if size else []


def lefschetz_coordinates(v, g=None):
    """Coordinates of a homogeneous v in the primitive bases.

    Returns ``{i: coefficient vector over lambda0_basis(g, k - 2i)}`` with the
    zero components omitted.
    """
    g = v.g if g is None else g
    if not v:
        return {}
    k = v.degree()
    if k > 2 * g:
        return {}
    blocks, inv = _decomposition_data(g, k)
    x = matvec(inv, v.vector(k))
    out = {}
    pos = 0
    for i, size in blocks:
        part = x[pos:pos + size]
        pos += size
        if any(part):
            out[i] = part
    return out


def lefschetz_decompose(v):
    """List of ``(i, c_i)`` with c_i primitive of degree k - 2i and v = sum gamma^i ^ c_i."""
    if not v.is_homogeneous():
        raise ValueError("lefschetz_decompose needs a homogeneous element")
    g = v.g
    out = []
    for i, coords in sorted(lefschetz_coordinates(v).items()):
        basis = lambda0_basis(g, v.degree() - 2 * i)
        comp = ExteriorElement(v.n)
        for c, b in zip(coords, basis):
            if c:
                comp = comp + b.scale(c)
        out.append((i, comp))
    return out


def apply_linear(t, v):
    """Image of v under the algebra map induced by the matrix t (t[j][i] = coeff of psi_j in t(psi_i))."""
    n = v.n
    images = []
    for i in range(n):
        images.append(ExteriorElement(n, {(j + 1,): t[j][i] for j in range(n) if t[j][i]}))
    out = ExteriorElement(n)
    for key, c in v.coeffs.items():
        term = ExteriorElement.one(n)
        for i in key:
            term = wedge(term, images[i - 1])
            if not term:
                break
        out = out + term.scale(c)
    return out


def exterior_power_matrix(t, k):
    """Matrix of the induced map on the degree-k piece."""
    n = len(t)
    cols = monomials(n, k)
    index = monomial_index(n, k)
    m = [[Fraction(0)] * len(cols) for _ in range(len(cols))]
    for j, mono in enumerate(cols):
        img = apply_linear(t, ExteriorElement(n, {mono: 1}))
        for key, c in img.coeffs.items():
            m[index[key]][j] = c
    return m
