"""Local monodromy on the homology of branched double covers.

A partition a of an even number d records how d branch points collide.
Vanishing cycles lambda_j join consecutive branch points; the half twist
T_i acts by the Picard-Lefschetz formula c -> c + (c, lambda_i) lambda_i with
(lambda_j, lambda_{j+1}) = 1.  The subgroup fixing the collision pattern is
generated by the T_j whose index j is not a partial sum of the parts.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .exterior import exterior_power_matrix
from .linalg import identity, kernel_basis, zeros


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __init__(self, parts):
        parts = tuple(int(a) for a in parts)
        if not parts or any(a < 1 for a in parts):
            raise ValueError("parts must be positive integers")
        if sum(parts) % 2:
            raise ValueError("the parts must add up to an even number")
        ordered = tuple(a for a in parts if a % 2) + tuple(a for a in parts if a % 2 == 0)
        object.__setattr__(self, "parts", ordered)

    @property
    def d(self):
        return sum(self.parts)

    @property
    def omega(self):
        return sum(a % 2 for a in self.parts) // 2

    @property
    def epsilon(self):
        return sum(1 for a in self.parts if a % 2 == 0)

    def partial_sums(self):
        out = [0]
        for a in self.parts:
            out.append(out[-1] + a)
        return out

    def generator_indices(self):
        cut = set(self.partial_sums()[1:-1])
        return [j for j in range(1, self.d) if j not in cut]


def even_partitions(max_d):
    """All partitions of every even d with 2 <= d <= max_d (parts in non-increasing order)."""
    def parts_of(n, cap):
        if n == 0:
            yield ()
            return
        for a in range(min(n, cap), 0, -1):
            for rest in parts_of(n - a, a):
                yield (a,) + rest
    out = []
    for d in range(2, max_d + 1, 2):
        out.extend(parts_of(d, d))
    return out


def chain_twist(indices, i):
    """Matrix of T_i on the span of lambda_j, j in indices (column convention)."""
    pos = {j: k for k, j in enumerate(indices)}
    n = len(indices)
    m = identity(n)
    if i not in pos:
        raise ValueError(f"lambda_{i} is not in the basis")
    col_i = pos[i]
    if i + 1 in pos:
        m[col_i][pos[i + 1]] = Fraction(-1)
    if i - 1 in pos:
        m[col_i][pos[i - 1]] = Fraction(1)
    return m


@dataclass
class BraidRep:
    variant: str
    dimension: int
    generators: list     # (index, matrix)
    basis: tuple = ()


def build_rep(p, variant):
    if not isinstance(p, Partition):
        p = Partition(p)
    gens = p.generator_indices()
    if variant == "conn":
        basis = tuple(range(0, p.d))
    elif variant == "disc":
        if p.omega < 1:
            raise ValueError("the disc variant needs at least two odd parts")
        # T_j with j != a_1 preserves the span of the other lambdas, so this is
        # also the quotient by the boundary relation solved for lambda_{a_1}
        basis = tuple(j for j in range(1, p.d) if j != p.parts[0])
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return BraidRep(variant, len(basis), [(j, chain_twist(basis, j)) for j in gens], basis)


def invariant_dims_by_degree(rep):
    n = rep.dimension
    out = []
    for l in range(n + 1):
        size = comb(n, l)
        if not rep.generators:
            out.append(size)
            continue
        rows = []
        for _, t in rep.generators:
            m = exterior_power_matrix(t, l) if l else [[Fraction(1)]]
            for i, row in enumerate(m):
                rows.append([x - (1 if i == j else 0) for j, x in enumerate(row)])
        out.append(kernel_basis(rows, size).dim)
    return out


def exterior_invariants_dim(rep):
    return sum(invariant_dims_by_degree(rep))


def closed_form_invariants(p, variant):
    if not isinstance(p, Partition):
        p = Partition(p)
    total = prod(a + 1 for a in p.parts)
    if variant == "conn":
        return total
    if variant == "disc":
        if p.omega < 1:
            raise ValueError("the disc variant needs at least two odd parts")
        return Fraction(total, 4)
    raise ValueError(f"unknown variant {variant!r}")


@lru_cache(maxsize=None)
def _invariants(p, variant):
    return exterior_invariants_dim(build_rep(p, variant))


def total_local_invariants(g, p, variant):
    if not isinstance(p, Partition):
        p = Partition(p)
    inv = _invariants(p, variant)
    return inv * 2 ** (4 * g if variant == "disc" else 4 * g - 2)


def match_jacobian_bound(g, p):
    from .jacobian import compactified_jacobian_betti, singular_type_from_orders

    if not isinstance(p, Partition):
        p = Partition(p)
    target = compactified_jacobian_betti(singular_type_from_orders(g, p.parts))
    variants = ["conn"] + (["disc"] if p.omega >= 1 else [])
    return all(total_local_invariants(g, p, v) == target for v in variants)


# -- Picard-Lefschetz on the chain lambda_1..lambda_{2r-1} plus mu -------------

@dataclass
class IntersectionData:
    r: int

    @property
    def size(self):
        return 2 * self.r

    def labels(self):
        return [f"lambda_{j}" for j in range(1, 2 * self.r)] + ["mu"]

    def pairing(self):
        n = self.size
        m = zeros(n, n)
        for j in range(n - 2):
            m[j][j + 1] = Fraction(1)
            m[j + 1][j] = Fraction(-1)
        mu = n - 1
        m[mu][0] = Fraction(1)
        m[0][mu] = Fraction(-1)
        return m

    def boundary(self):
        # sum of the odd-indexed lambdas
        return [Fraction(1 if j % 2 == 0 else 0) for j in range(self.size - 1)] + [Fraction(0)]


def picard_lefschetz_twist(data, i):
    """Matrix of c -> c + (c, lambda_i) lambda_i (columns are images of basis vectors)."""
    if not 1 <= i <= 2 * data.r - 1:
        raise ValueError("twist index out of range")
    n = data.size
    q = data.pairing()
    m = identity(n)
    for c in range(n):
        m[i - 1][c] += q[c][i - 1]
    return m


def tabulated_action(r, i):
    """The chain formula for T_i on lambda_1..lambda_{2r-1}, together with T_1(mu) = mu + lambda_1."""
    n = 2 * r
    m = chain_twist(tuple(range(1, 2 * r)), i)
    full = identity(n)
    for a in range(n - 1):
        for b in range(n - 1):
            full[a][b] = m[a][b]
    if i == 1:
        full[0][n - 1] = Fraction(1)
    return full


# -- the model representation on U = span(c_1..c_2m) ---------------------------

def linealg_generators(m, case, t=None):
    if case == 1:
        return list(range(1, 2 * m + 1))
    if case == 2:
        return list(range(2, 2 * m + 1))
    if case == 3:
        if t is None or t % 2 == 0 or not 1 <= t < 2 * m:
            raise ValueError("case 3 needs an odd t < 2m")
        return [i for i in range(2, 2 * m + 1) if i != t + 1]
    raise ValueError("case must be 1, 2 or 3")


def linealg_expected(m, case, t=None):
    if case == 1:
        return m + 1
    if case == 2:
        return 2 * m + 1
    return (t + 1) * (2 * m - t + 1)


def omega_form(m):
    """Omega = sum_s c_[1,2s-1] ^ c_2s as an ExteriorElement on 2m generators."""
    from .exterior import ExteriorElement

    out = ExteriorElement(2 * m)
    for s in range(1, m + 1):
        left = ExteriorElement(2 * m, {(j,): 1 for j in range(1, 2 * s, 2)})
        out = out + (left ^ ExteriorElement.generator(2 * m, 2 * s))
    return out


def lemma_linealg_check(m, case, t=None):
    from .exterior import apply_linear

    basis = tuple(range(1, 2 * m + 1))
    gens = linealg_generators(m, case, t)
    rep = BraidRep("model", 2 * m, [(i, chain_twist(basis, i)) for i in gens], basis)
    found = exterior_invariants_dim(rep)
    expected = linealg_expected(m, case, t)
    om = omega_form(m)
    omega_fixed = all(apply_linear(mat, om) == om for _, mat in rep.generators)
    return {"m": m, "case": case, "t": t, "invariants": found, "expected": expected,
            "match": found == expected, "omega_fixed": omega_fixed,
            "omega_power_nonzero": bool(om.power(m))}
