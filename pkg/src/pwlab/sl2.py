"""Variant part of the SL2 cohomology: E-polynomial, dimensions, weights, perversities."""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .linalg import format_rational


class BivariatePolynomial:
    """Polynomial in x, y with rational coefficients, stored as {(i, j): c}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for key, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                self.coeffs[tuple(key)] = self.coeffs.get(tuple(key), 0) + c
        self.coeffs = {k: c for k, c in self.coeffs.items() if c}

    @classmethod
    def xy_power(cls, e, c=1):
        return cls({(e, e): c})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return BivariatePolynomial({k: c * other for k, c in self.coeffs.items()})
        out = defaultdict(Fraction)
        for (a, b), c in self.coeffs.items():
            for (p, q), e in other.coeffs.items():
                out[(a + p, b + q)] += c * e
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BivariatePolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        return max((i + j for i, j in self.coeffs), default=-1)

    def is_diagonal(self):
        return all(i == j for i, j in self.coeffs)

    def reflect(self, top):
        """x^top y^top P(1/x, 1/y)."""
        if any(i > top or j > top for i, j in self.coeffs):
            raise ValueError("exponent exceeds the reflection degree")
        return BivariatePolynomial({(top - i, top - j): c for (i, j), c in self.coeffs.items()})

    def xy_coefficients(self):
        """{p: coefficient of (xy)^p} for a diagonal polynomial."""
        if not self.is_diagonal():
            raise ValueError("polynomial is not a polynomial in xy")
        return {i: c for (i, _), c in sorted(self.coeffs.items())}

    def to_json(self):
        return [{"x": i, "y": j, "coeff": format_rational(c)} for (i, j), c in sorted(self.coeffs.items())]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{format_rational(c)}*x^{i}y^{j}" for (i, j), c in sorted(self.coeffs.items()))


def _xy():
    return BivariatePolynomial.xy_power(1)


def e_var_product_form(g):
    """(2^2g - 1)(xy)^(2g-2) ((xy - 1)^(2g-2) - (xy + 1)^(2g-2)) / 2."""
    xy = _xy()
    one = BivariatePolynomial.constant(1)
    inner = (xy - one) ** (2 * g - 2) - (xy + one) ** (2 * g - 2)
    return inner * BivariatePolynomial.xy_power(2 * g - 2, Fraction(2 ** (2 * g) - 1, 2))


def e_var_printed_expansion(g):
    """sum_{i=1}^{g-1} (2^2g - 1) C(2g-2, 2i-1) (xy)^(2g-3+2i), as printed (positive coefficients)."""
    out = BivariatePolynomial()
    for i in range(1, g):
        out = out + BivariatePolynomial.xy_power(2 * g - 3 + 2 * i, (2 ** (2 * g) - 1) * comb(2 * g - 2, 2 * i - 1))
    return out


def e_var_expansion(g):
    """Expansion with the sign each odd-degree variant class carries: the negative of the printed sum."""
    return -e_var_printed_expansion(g)


def e_var(g):
    if g < 2:
        raise ValueError("genus must be at least 2")
    prod_form = e_var_product_form(g)
    if prod_form != e_var_expansion(g):
        raise ArithmeticError("closed forms of the variant E-polynomial disagree")
    return prod_form


def is_palindromic(poly, g):
    return poly.reflect(6 * g - 6) == poly


@dataclass
class VariantTable:
    g: int
    dims: dict = field(default_factory=dict)

    def weight(self, k):
        return 2 * k - 4 * self.g + 4

    def perversity(self, k):
        return k - 2 * self.g + 2

    def to_json(self):
        return [{"k": k, "dim": n, "weight": self.weight(k), "perversity": self.perversity(k)}
                for k, n in sorted(self.dims.items())]


def variant_dims(g):
    if g < 2:
        raise ValueError("genus must be at least 2")
    dims = {}
    for d in range(1, g):
        dims[4 * g + 2 * d - 5] = (2 ** (2 * g) - 1) * comb(2 * g - 2, 2 * g - 2 * d - 1)
    return VariantTable(g, dims)


def variant_consistency(g):
    table = variant_dims(g)
    pw = all(2 * table.perversity(k) == table.weight(k) for k in table.dims)
    pairing = all(table.dims.get(4 * g + 2 * d - 5) == table.dims.get(6 * g - 5 - 2 * d)
                  for d in range(1, g))
    # each class of degree k and weight w contributes (-1)^k (xy)^(w/2)
    coeffs = e_var(g).xy_coefficients()
    expected = defaultdict(int)
    for k, n in table.dims.items():
        expected[table.weight(k) // 2] += (-1) ** k * n
    e_match = coeffs == {p: Fraction(c) for p, c in expected.items() if c}
    return {"g": g, "p_equals_w": pw, "lefschetz_pairing": pairing, "e_var_matches_dims": e_match,
            "palindromic": is_palindromic(e_var(g), g),
            "printed_expansion_is_negative": e_var_printed_expansion(g) == -e_var(g)}


@dataclass
class SL2Skeleton:
    g: int
    invariant_dims: dict
    variant: VariantTable
    rules: dict

    def dims(self):
        out = defaultdict(int)
        for k, n in self.invariant_dims.items():
            out[k] += n
        for k, n in self.variant.dims.items():
            out[k] += n
        return dict(sorted(out.items()))

    def multiply_kinds(self, left, right):
        """Kind of a product: 'invariant', 'variant' or 'zero'.

        ``left``/``right`` are 'variant' or a generator name (alpha, beta, psi, gamma, one).
        """
        if left == "variant" and right == "variant":
            return "zero"
        if "variant" in (left, right):
            other = right if left == "variant" else left
            if other in ("alpha", "one"):
                return "variant"
            return "zero"
        return "invariant"


def assemble_sl2_ring_skeleton(g, pgl2_dims):
    """Degree table of H^*(M-check) = invariant part + variant part, with the product rules."""
    inv = defaultdict(int)
    for key, n in pgl2_dims.items():
        d = key[0] if isinstance(key, tuple) else key
        inv[d] += n
    table = variant_dims(g)
    rules = {
        "variant*variant": "0",
        "beta*variant": "0",
        "psi*variant": "0",
        "alpha^(g-2d) on degree 4g+2d-5": "isomorphism onto degree 6g-5-2d",
    }
    return SL2Skeleton(g, dict(sorted(inv.items())), table, rules)
