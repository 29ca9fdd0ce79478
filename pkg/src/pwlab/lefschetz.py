"""Bi-graded modules with a Lefschetz operator Y of bidegree (2, 2).

Pieces are indexed by (d, w).  Hard Lefschetz is centred at weight w0:
Y^l maps weight w0 - l isomorphically onto weight w0 + l.
"""

from fractions import Fraction

from .linalg import Subspace, identity, inverse, kernel_basis, matmul, matvec, rank, zeros


class BiGradedModule:
    def __init__(self, dims, y_matrices, w0, labels=None):
        self.dims = {key: n for key, n in dims.items() if n}
        self.Y = y_matrices
        self.w0 = w0
        self.labels = labels or {}
        self._ypow = {}
        self._prim = {}
        self._iso = {}

    @classmethod
    def from_ring(cls, pres):
        alpha = pres.alpha()
        ys = {}
        for (d, w), labels in pres.pieces.items():
            tgt = pres.piece_dim(d + 2, w + 2)
            m = zeros(tgt, len(labels))
            for j, lab in enumerate(labels):
                col = pres.vector(alpha * pres.basis_element(lab), d + 2, w + 2)
                for i, c in enumerate(col):
                    m[i][j] = c
            ys[(d, w)] = m
        return cls(pres.dims(), ys, pres.w0, labels=pres.pieces)

    def dim(self, d, w):
        return self.dims.get((d, w), 0)

    def weights(self):
        return sorted({w for _, w in self.dims})

    def degrees_at(self, w):
        return sorted(d for d, ww in self.dims if ww == w)

    def stack_dim(self, w):
        return sum(n for (_, ww), n in self.dims.items() if ww == w)

    def y_power(self, d, w, l):
        """Matrix of Y^l from piece (d, w) to piece (d + 2l, w + 2l)."""
        key = (d, w, l)
        if key in self._ypow:
            return self._ypow[key]
        src = self.dim(d, w)
        if l == 0:
            m = identity(src)
        else:
            prev = self.y_power(d, w, l - 1)
            dd, ww = d + 2 * (l - 1), w + 2 * (l - 1)
            tgt = self.dim(dd + 2, ww + 2)
            step = self.Y.get((dd, ww))
            if not tgt or not src or step is None or not prev:
                m = zeros(tgt, src)
            else:
                m = matmul(step, prev)
        self._ypow[key] = m
        return m

    def apply_y(self, d, w, v, l=1):
        return matvec(self.y_power(d, w, l), v)

    # -- primitive parts ---------------------------------------------------

    def primitive(self, d, w):
        """P in piece (d, w): kernel of Y^(w0 - w + 1); zero above w0."""
        key = (d, w)
        if key not in self._prim:
            n = self.dim(d, w)
            if w > self.w0 or not n:
                self._prim[key] = Subspace.zero(n)
            else:
                m = self.y_power(d, w, self.w0 - w + 1)
                self._prim[key] = kernel_basis(m, n) if m else Subspace.full(n)
        return self._prim[key]

    def isobaric_basis(self, d, w):
        """List of (j, vectors) with vectors a basis of Y^j P_(d-2j, w-2j) inside piece (d, w)."""
        out = []
        for j in range(w // 2 + 1):
            sd, sw = d - 2 * j, w - 2 * j
            if sw > self.w0 or sd < 0 or j > self.w0 - sw:
                continue
            prim = self.primitive(sd, sw)
            if prim.dim:
                ym = self.y_power(sd, sw, j)
                out.append((j, [matvec(ym, v) for v in prim.basis]))
        return out

    def _iso_data(self, d, w):
        key = (d, w)
        if key not in self._iso:
            blocks = self.isobaric_basis(d, w)
            cols = [v for _, vs in blocks for v in vs]
            n = self.dim(d, w)
            if len(cols) != n or rank(cols, n) != n:
                raise ArithmeticError(f"isobaric pieces do not span piece {(d, w)}")
            mat = [[cols[j][i] for j in range(n)] for i in range(n)]
            self._iso[key] = ([(j, len(vs)) for j, vs in blocks], inverse(mat) if n else [])
        return self._iso[key]

    def isobaric_components(self, d, w, v):
        """Split v in piece (d, w) as sum_j Y^j p_j; returns {j: coordinates of p_j in primitive(d-2j, w-2j)}."""
        blocks, inv = self._iso_data(d, w)
        x = matvec(inv, v)
        out = {}
        pos = 0
        for j, size in blocks:
            part = x[pos:pos + size]
            pos += size
            if any(part):
                out[j] = part
        return out

    def primitive_projection(self, d, w, v):
        """Pi(v): the primitive summand of v, as a vector in piece (d, w)."""
        n = self.dim(d, w)
        if w > self.w0:
            return [Fraction(0)] * n
        comps = self.isobaric_components(d, w, v)
        prim = self.primitive(d, w)
        out = [Fraction(0)] * n
        for c, b in zip(comps.get(0, ()), prim.basis):
            for i, x in enumerate(b):
                out[i] += c * x
        return out

    def perverse_level(self, d, w, v):
        """Smallest i with v in the span of the Y^j P_w' with w' + 2j <= i; None for v = 0."""
        comps = self.isobaric_components(d, w, v)
        if not comps:
            return None
        return max((w - 2 * j) + 2 * j for j in comps)

    def perverse_level_subspace(self, d, i):
        """Inside the degree-d stack (pieces ordered by weight), the span of Y^j P_w' with w' + 2j <= i."""
        layout = self.stack_layout(d)
        total = sum(n for _, n in layout)
        vectors = []
        offset = 0
        for w, n in layout:
            for j, vs in self.isobaric_basis(d, w):
                if (w - 2 * j) + 2 * j <= i:
                    for v in vs:
                        full = [Fraction(0)] * total
                        full[offset:offset + n] = v
                        vectors.append(full)
            offset += n
        return Subspace(total, vectors)

    def stack_layout(self, d):
        return [(w, self.dims[(dd, w)]) for dd, w in sorted(self.dims) if dd == d]


def hard_lefschetz_verify(m):
    """For each l >= 0, check Y^l: weight w0 - l -> weight w0 + l is square and invertible.

    Returns a list of dicts {l, source_dim, target_dim, rank, iso}.
    """
    report = []
    l = 0
    while m.w0 - l >= 0 or m.w0 + l <= max(m.weights(), default=0):
        src_w, tgt_w = m.w0 - l, m.w0 + l
        src = m.stack_dim(src_w) if src_w >= 0 else 0
        tgt = m.stack_dim(tgt_w)
        r = 0
        if src_w >= 0:
            for d in m.degrees_at(src_w):
                ym = m.y_power(d, src_w, l)
                if ym and m.dim(d, src_w):
                    r += rank(ym, m.dim(d, src_w))
        report.append({"l": l, "source_dim": src, "target_dim": tgt, "rank": r,
                       "iso": src == tgt == r})
        l += 1
    return report


def primitive_basis(m, w, d=None):
    """Primitive subspace at weight w: of the piece (d, w) if d is given, else of the weight-w stack."""
    if d is not None:
        return m.primitive(d, w)
    degs = m.degrees_at(w)
    total = sum(m.dim(dd, w) for dd in degs)
    vectors = []
    offset = 0
    for dd in degs:
        n = m.dim(dd, w)
        for v in m.primitive(dd, w).basis:
            full = [Fraction(0)] * total
            full[offset:offset + n] = v
            vectors.append(full)
        offset += n
    return Subspace(total, vectors)


def isobaric_pieces(m):
    """Map (w, j) -> total dimension of Y^j P_w."""
    out = {}
    for d, w in sorted(m.dims):
        for j, vs in m.isobaric_basis(d, w):
            key = (w - 2 * j, j)
            out[key] = out.get(key, 0) + len(vs)
    return out


def delta(d, w):
    return d - w


def element_delta(x):
    d, w = x.bidegree()
    return d - w
