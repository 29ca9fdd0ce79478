"""Betti counts for compactified Jacobians of integral curves with A_k singularities.

A singular point of type A_k has delta invariant ceil(k/2).  Points with k
odd form the set O, points with k even the set E.
"""

from dataclasses import dataclass
from itertools import product
from math import prod


def delta_invariant(k):
    if k < 1:
        raise ValueError("A_k needs k >= 1")
    return (k + 1) // 2


@dataclass(frozen=True)
class SingularType:
    odd_points: tuple = ()
    even_points: tuple = ()
    g_tilde: int = 0

    def __post_init__(self):
        object.__setattr__(self, "odd_points", tuple(self.odd_points))
        object.__setattr__(self, "even_points", tuple(self.even_points))
        if self.g_tilde < 0:
            raise ValueError("normalization genus must be >= 0")
        if any(dl < 1 for dl in self.odd_points + self.even_points):
            raise ValueError("delta values must be >= 1")

    @property
    def deltas(self):
        return self.odd_points + self.even_points


def singular_type_from_orders(g, orders):
    """Singular type of the spectral curve from the vanishing orders a_i of the discriminant.

    Even a gives an odd-type point, odd a > 1 an even-type point, both with
    delta = floor(a/2); a = 1 gives nothing.  The normalization has genus
    2g + omega - 1 where 2 omega is the number of odd a_i.
    """
    orders = [int(a) for a in orders]
    if any(a < 1 for a in orders):
        raise ValueError("orders must be positive")
    odd_count = sum(a % 2 for a in orders)
    if odd_count % 2:
        raise ValueError("odd orders must come in an even number")
    omega = odd_count // 2
    odd_pts = tuple(a // 2 for a in orders if a % 2 == 0)
    even_pts = tuple(a // 2 for a in orders if a % 2 == 1 and a > 1)
    return SingularType(odd_pts, even_pts, 2 * g + omega - 1)


def jac_betti_sum(g_tilde, o):
    return 2 ** (2 * g_tilde + o)


def blowup_indices(t):
    """All I with 0 <= i_a <= delta_a, odd points first."""
    return product(*[range(dl + 1) for dl in t.deltas])


def odd_count(t, index):
    # an odd point stays odd until it is fully blown up
    n = len(t.odd_points)
    return sum(1 for i, dl in zip(index[:n], t.odd_points) if i < dl)


def blowup_poset_sum(t):
    return sum(jac_betti_sum(t.g_tilde, odd_count(t, I)) for I in blowup_indices(t))


def compactified_jacobian_betti(t):
    return (2 ** (2 * t.g_tilde) * prod(2 * dl + 1 for dl in t.odd_points)
            * prod(dl + 1 for dl in t.even_points))


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def even_factor(dl, reading="consistent"):
    """E-factor: 1 + t^2 + ... + t^(2 dl) (consistent) or 1 + t^2 + ... + t^dl (printed)."""
    if reading not in ("consistent", "printed"):
        raise ValueError(f"unknown reading {reading!r}")
    cap = 2 * dl if reading == "consistent" else dl
    return [1 - i % 2 for i in range(cap - cap % 2 + 1)]


def poincare_polynomial(t, reading="consistent"):
    """Coefficient list [c_0, c_1, ...] of the Poincare polynomial."""
    p = [1]
    for _ in range(2 * t.g_tilde):
        p = _poly_mul(p, [1, 1])
    for dl in t.odd_points:
        p = _poly_mul(p, [1] * (2 * dl + 1))
    for dl in t.even_points:
        p = _poly_mul(p, even_factor(dl, reading))
    return p


def format_polynomial(coeffs, var="t"):
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "1" if i == 0 else var if i == 1 else f"{var}^{i}"
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"


def upper_poset_sum(t, index):
    """Sum of 2^(2g~ + o_I') over I' >= I."""
    ranges = [range(i, dl + 1) for i, dl in zip(index, t.deltas)]
    return sum(jac_betti_sum(t.g_tilde, odd_count(t, I)) for I in product(*ranges))


def blown_up_type(t, index):
    """Singular type of the partial normalization C_I: each point loses i_a from its delta.

    A fully blown-up odd point joins two branches, so the genus is unchanged;
    the count 2^(2g~) is carried by g_tilde, which stays fixed.
    """
    n = len(t.odd_points)
    odd = tuple(dl - i for i, dl in zip(index[:n], t.odd_points) if dl - i > 0)
    even = tuple(dl - i for i, dl in zip(index[n:], t.even_points) if dl - i > 0)
    return SingularType(odd, even, t.g_tilde)


def e1_degenerate(t):
    return blowup_poset_sum(t) == compactified_jacobian_betti(t)
