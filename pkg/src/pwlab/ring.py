"""Cohomology ring of the rank-2 twisted Higgs moduli space (PGL2 part).

The ring is the direct sum over k = 0..g of  Lambda_0^k (x) Q[alpha, beta, gamma] / I^{g-k}_{n+k}
with n = deg D + 2 - 2g.  Monomials alpha^r beta^s gamma^u are exponent tuples
(r, s, u); polynomials are dicts from exponent tuples to Fractions.

Gradings: alpha, beta, gamma, psi have degree 2, 4, 6, 3 and weight 2, 2, 4, 2.
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm

from .exterior import (ExteriorElement, lambda0_basis, lambda0_dim,
                       lefschetz_coordinates, wedge)
from .linalg import Subspace, format_rational

ALPHA, BETA, GAMMA = (1, 0, 0), (0, 1, 0), (0, 0, 1)
ONE = (0, 0, 0)


def mono_bidegree(m):
    r, s, u = m
    return 2 * r + 4 * s + 6 * u, 2 * (r + s + 2 * u)


def mono_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def poly_mul(p, q):
    out = defaultdict(Fraction)
    for ma, ca in p.items():
        for mb, cb in q.items():
            out[mono_mul(ma, mb)] += ca * cb
    return {m: c for m, c in out.items() if c}


def relation_polynomial(r, s, t, a, b):
    """rho^c_{r,s,t} for the ideal I^a_b, with c = r + 3s + 2t - 2a + 2 - b.

    An empty dict (the zero polynomial) is returned when c < 0.
    """
    c = r + 3 * s + 2 * t - 2 * a + 2 - b
    out = {}
    if c < 0:
        return out
    for i in range(min(c, r, s) + 1):
        coeff = Fraction(2 ** (t + i), factorial(r - i) * factorial(s - i) * factorial(i))
        out[(r - i, s - i, t + i)] = coeff
    return out


def relation_index_set(a, b, bound):
    """All (r, s, t) with r + s + 2t <= bound satisfying the index inequalities of I^a_b."""
    out = []
    for t in range(bound // 2 + 1):
        for s in range(bound - 2 * t + 1):
            for r in range(bound - 2 * t - s + 1):
                if r + 3 * s + 3 * t > 3 * a - 3 + b and r + 2 * s + 2 * t >= 2 * a - 2 + b:
                    out.append((r, s, t))
    return out


def slice_monomials(d, w):
    """Monomials of bidegree (d, w), sorted lexicographically descending."""
    if d < 0 or w < 0 or d % 2 or w % 2 or d < w:
        return ()
    half_delta = (d - w) // 2            # = s + u
    half_w = w // 2                      # = r + s + 2u
    out = []
    for u in range(half_delta + 1):
        s = half_delta - u
        r = half_w - s - 2 * u
        if r >= 0:
            out.append((r, s, u))
    return tuple(sorted(out, reverse=True))


def _integral(poly):
    den = lcm(*[c.denominator for c in poly.values()])
    return {m: c * den for m, c in poly.items()}


@lru_cache(maxsize=None)
def ideal_generators(a, b, bound):
    """Generators of I^a_b of half-weight <= bound, with their bidegrees."""
    gens = []
    if a + 1 <= bound // 2:
        gens.append(((0, 0, a + 1), {(0, 0, a + 1): Fraction(1)}))
    for r, s, t in relation_index_set(a, b, bound):
        rho = relation_polynomial(r, s, t, a, b)
        if rho:
            gens.append(((r, s, t), _integral(rho)))
    return tuple(gens)


class IdealSlice:
    """The (d, w) slice of Q[alpha, beta, gamma] modulo I^a_b.

    ``relation_span`` is the span, inside the monomials of bidegree (d, w), of
    all monomial multiples of generators landing there.  The standard
    monomials are the non-pivot columns of its echelon form.
    """

    def __init__(self, a, b, d, w):
        self.a, self.b, self.d, self.w = a, b, d, w
        self.monomials = slice_monomials(d, w)
        index = {m: i for i, m in enumerate(self.monomials)}
        rows = []
        for lead, gen in ideal_generators(a, b, w // 2):
            gd, gw = mono_bidegree(lead)
            for mult in slice_monomials(d - gd, w - gw):
                row = [Fraction(0)] * len(self.monomials)
                for m, c in gen.items():
                    row[index[mono_mul(m, mult)]] += c
                rows.append(row)
        self.relation_span = Subspace(len(self.monomials), rows)
        pivots = set(self.relation_span.pivots)
        self.standard = tuple(m for i, m in enumerate(self.monomials) if i not in pivots)
        self._std_pos = [i for i in range(len(self.monomials)) if i not in pivots]
        self._index = index

    @property
    def dim(self):
        return len(self.standard)

    def contains(self, poly):
        return not any(self.reduce_vector(poly))

    def reduce_vector(self, poly):
        v = [Fraction(0)] * len(self.monomials)
        for m, c in poly.items():
            v[self._index[m]] += c
        res = self.relation_span.reduce(v)
        return [res[i] for i in self._std_pos]

    def normal_form(self, poly):
        return {m: c for m, c in zip(self.standard, self.reduce_vector(poly)) if c}


@lru_cache(maxsize=None)
def ideal_slice(a, b, d, w):
    return IdealSlice(a, b, d, w)


def split_by_bidegree(poly):
    out = defaultdict(dict)
    for m, c in poly.items():
        if c:
            out[mono_bidegree(m)][m] = c
    return out


class RingPresentation:
    """H^*(M-hat) for genus g and twisting degree deg D.

    Basis labels are triples (k, lam, mono): lam indexes lambda0_basis(g, k)
    and mono is a standard monomial of the summand k quotient.
    """

    def __init__(self, g, degD):
        if g < 2:
            raise ValueError("genus must be at least 2")
        if degD < 2 * g - 2:
            raise ValueError("deg D must be at least 2g - 2")
        self.g = g
        self.degD = degD
        self.n = degD + 2 - 2 * g
        self.canonical = self.n == 0
        self.w0 = g - 1 + degD
        self._reduce_cache = {}
        self._wedge_cache = {}
        self.pieces = {}
        self._build()

    def ideal_params(self, k):
        return self.g - k, self.n + k

    def quotient_slice(self, k, pd, pw):
        a, b = self.ideal_params(k)
        return ideal_slice(a, b, pd, pw)

    def _build(self):
        pieces = defaultdict(list)
        for k in range(self.g + 1):
            lam = lambda0_dim(self.g, k)
            for pw in range(0, 2 * self.w0 - 2 * k + 1, 2):
                for pd in range(pw, 2 * pw + 1, 2):
                    sl = self.quotient_slice(k, pd, pw)
                    for i in range(lam):
                        for m in sl.standard:
                            pieces[(pd + 3 * k, pw + 2 * k)].append((k, i, m))
        self.pieces = {key: tuple(sorted(v)) for key, v in sorted(pieces.items())}
        self.index = {key: {lab: i for i, lab in enumerate(labels)}
                      for key, labels in self.pieces.items()}

    # -- bookkeeping -------------------------------------------------------

    @staticmethod
    def label_bidegree(label):
        k, _, m = label
        d, w = mono_bidegree(m)
        return d + 3 * k, w + 2 * k

    def dims(self):
        return {key: len(v) for key, v in self.pieces.items()}

    def dim(self, d=None, w=None):
        return sum(len(v) for (pd, pw), v in self.pieces.items()
                   if (d is None or pd == d) and (w is None or pw == w))

    def total_dim(self):
        return sum(len(v) for v in self.pieces.values())

    def degrees(self):
        return sorted({d for d, _ in self.pieces})

    def weights(self):
        return sorted({w for _, w in self.pieces})

    def top_degree(self):
        nonzero = [d for (d, _), v in self.pieces.items() if v]
        return max(nonzero) if nonzero else 0

    def piece_dim(self, d, w):
        return len(self.pieces.get((d, w), ()))

    # -- elements ----------------------------------------------------------

    def reduce(self, k, poly):
        """Normal form of poly in the summand-k quotient, as {mono: coeff}."""
        out = {}
        for (pd, pw), part in split_by_bidegree(poly).items():
            out.update(self.quotient_slice(k, pd, pw).normal_form(part))
        return out

    def _reduce_mono(self, k, m):
        key = (k, m)
        hit = self._reduce_cache.get(key)
        if hit is None:
            hit = self._reduce_cache[key] = self.reduce(k, {m: Fraction(1)})
        return hit

    def element(self, k, lam_coords, poly):
        if not 0 <= k <= self.g:
            return RingElement(self, {})
        nf = self.reduce(k, poly)
        terms = {}
        for i, c in enumerate(lam_coords):
            if c:
                for m, cm in nf.items():
                    terms[(k, i, m)] = c * cm
        return RingElement(self, terms)

    def _lam_unit(self, k, i):
        v = [Fraction(0)] * lambda0_dim(self.g, k)
        v[i] = Fraction(1)
        return v

    def one(self):
        return self.element(0, [1], {ONE: 1})

    def zero(self):
        return RingElement(self, {})

    def alpha(self):
        return self.element(0, [1], {ALPHA: 1})

    def beta(self):
        return self.element(0, [1], {BETA: 1})

    def gamma(self):
        return self.element(0, [1], {GAMMA: 1})

    def from_exterior(self, v):
        """Ring element of a (homogeneous) class in the exterior algebra on the psi's."""
        out = self.zero()
        by_degree = defaultdict(dict)
        for key, c in v.coeffs.items():
            by_degree[len(key)][key] = c
        for t, coeffs in by_degree.items():
            part = ExteriorElement(2 * self.g, coeffs)
            for i, coords in lefschetz_coordinates(part, self.g).items():
                out = out + self.element(t - 2 * i, coords, {(0, 0, i): 1})
        return out

    def psi(self, i):
        return self.from_exterior(ExteriorElement.generator(2 * self.g, i))

    def psi_monomial(self, subset):
        return self.from_exterior(ExteriorElement(2 * self.g, {tuple(sorted(subset)): 1}))

    def basis_element(self, label):
        return RingElement(self, {label: Fraction(1)})

    def _lam_product(self, k1, i1, k2, i2):
        key = (k1, i1, k2, i2)
        hit = self._wedge_cache.get(key)
        if hit is None:
            b1 = lambda0_basis(self.g, k1)[i1]
            b2 = lambda0_basis(self.g, k2)[i2]
            prod = wedge(b1, b2)
            hit = lefschetz_coordinates(prod, self.g) if prod else {}
            self._wedge_cache[key] = hit
        return hit

    def mul(self, x, y):
        if x.pres is not self or y.pres is not self:
            raise ValueError("elements belong to different presentations")
        out = defaultdict(Fraction)
        for (k1, i1, m1), c1 in x.terms.items():
            for (k2, i2, m2), c2 in y.terms.items():
                for i, coords in self._lam_product(k1, i1, k2, i2).items():
                    k = k1 + k2 - 2 * i
                    mono = mono_mul(mono_mul(m1, m2), (0, 0, i))
                    nf = self._reduce_mono(k, mono)
                    if not nf:
                        continue
                    c12 = c1 * c2
                    for lam, cl in enumerate(coords):
                        if cl:
                            for m, cm in nf.items():
                                out[(k, lam, m)] += c12 * cl * cm
        return RingElement(self, out)

    def vector(self, x, d, w):
        """Coordinates of the (d, w) component of x in the piece basis."""
        idx = self.index.get((d, w), {})
        v = [Fraction(0)] * len(idx)
        for lab, c in x.terms.items():
            if self.label_bidegree(lab) == (d, w):
                v[idx[lab]] = c
        return v

    def from_vector(self, d, w, v):
        labels = self.pieces.get((d, w), ())
        return RingElement(self, {lab: c for lab, c in zip(labels, v) if c})

    def dims_json(self):
        return [{"d": d, "w": w, "dim": n} for (d, w), n in sorted(self.dims().items()) if n]


class RingElement:
    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    def _check(self, other):
        if self.pres is not other.pres:
            raise ValueError("elements belong to different presentations")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return RingElement(self.pres, out)

    def __neg__(self):
        return RingElement(self.pres, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return RingElement(self.pres, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return self.pres.mul(self, other)
        return self.scale(Fraction(other))

    def __rmul__(self, c):
        return self.scale(Fraction(c))

    def __pow__(self, e):
        out = self.pres.one()
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    __hash__ = None

    def bidegrees(self):
        return {self.pres.label_bidegree(lab) for lab in self.terms}

    def is_homogeneous(self):
        return len(self.bidegrees()) <= 1

    def bidegree(self):
        bd = self.bidegrees()
        if len(bd) != 1:
            raise ValueError("element is zero or not bi-homogeneous")
        return bd.pop()

    def component(self, d, w):
        return RingElement(self.pres, {lab: c for lab, c in self.terms.items()
                                       if self.pres.label_bidegree(lab) == (d, w)})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, i, (r, s, u)), c in sorted(self.terms.items()):
            mono = "*".join(x for x in (
                f"a^{r}" if r else "", f"b^{s}" if s else "", f"c^{u}" if u else "",
                f"L{k}[{i}]" if k else "") if x) or "1"
            parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def build_ring(g, degD):
    return RingPresentation(g, degD)


def gl2_extend(dims, g):
    """Tensor a (d, w) dimension table with the exterior algebra on 2g classes of degree 1, weight 1."""
    out = defaultdict(int)
    for (d, w), n in dims.items():
        if n:
            for j in range(2 * g + 1):
                out[(d + j, w + j)] += comb(2 * g, j) * n
    return dict(sorted(out.items()))


def vanishing_check(g, degD):
    """Compare the vanishing of each beta^s psi^T with the predicted rule.

    Pole case: zero exactly when 2s + t >= deg D.  Canonical case: zero when
    2s + t >= 2g - 2, except that the gamma^r part of psi^T (t = 2r) times
    beta^s survives when r + s = g - 1.  Returns one dict per (s, T) in the
    weight window with ``predicted_zero`` and ``is_zero``.
    """
    from itertools import combinations

    pres = build_ring(g, degD)
    beta = pres.beta()
    rows = []
    for t in range(2 * g + 1):
        for subset in combinations(range(1, 2 * g + 1), t):
            psi_t = pres.psi_monomial(subset)
            if pres.canonical:
                coords = lefschetz_coordinates(ExteriorElement(2 * g, {subset: 1}), g)
                has_gamma_part = t % 2 == 0 and any(coords.get(t // 2, ()))
            bs = pres.one()
            for s in range(pres.w0 - t + 1):
                prod = bs * psi_t
                if pres.canonical:
                    survivor = has_gamma_part and t // 2 + s == g - 1
                    predicted = 2 * s + t >= 2 * g - 2 and not survivor
                else:
                    predicted = 2 * s + t >= degD
                rows.append({"s": s, "subset": subset, "predicted_zero": predicted,
                             "is_zero": not prod})
                bs = bs * beta
    return rows
