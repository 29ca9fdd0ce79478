"""Weight filtration versus isobaric (perverse) filtration on H^*(M-hat).

The perverse side is the span of the isobaric pieces Y^j P_w with w + 2j <= i.
Equality is tested as equality of canonical subspaces, degree by degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .lefschetz import BiGradedModule, hard_lefschetz_verify
from .linalg import Subspace, rank, subspace_equal
from .ring import build_ring, gl2_extend


def weight_filtration_level(pres, i):
    """Per degree d: span of the basis vectors of weight <= i inside the degree-d stack."""
    out = {}
    for d in pres.degrees():
        layout = [(w, len(v)) for (dd, w), v in sorted(pres.pieces.items()) if dd == d and v]
        total = sum(n for _, n in layout)
        vectors = []
        offset = 0
        for w, n in layout:
            if w <= i:
                for k in range(n):
                    e = [Fraction(0)] * total
                    e[offset + k] = Fraction(1)
                    vectors.append(e)
            offset += n
        out[d] = Subspace(total, vectors)
    return out


def perverse_filtration_level(module, i):
    degrees = sorted({d for d, _ in module.dims})
    return {d: module.perverse_level_subspace(d, i) for d in degrees}


def element_level(module, x):
    """Perverse level of a ring element: max over its bi-homogeneous components."""
    pres = x.pres
    levels = []
    for d, w in x.bidegrees():
        lvl = module.perverse_level(d, w, pres.vector(x, d, w))
        if lvl is not None:
            levels.append(lvl)
    return max(levels) if levels else None


def curious_hl_check(pres):
    """Rank table of cup with alpha^k from weight w0 - k to weight w0 + k.

    Multiplies by alpha^k in the ring directly, independent of the Lefschetz
    module's cached powers.
    """
    table = []
    w0 = pres.w0
    for k in range(w0 + 1):
        ak = pres.alpha() ** k
        src = tgt = r = 0
        for (d, w), labels in pres.pieces.items():
            if w == w0 + k:
                tgt += len(labels)
            if w != w0 - k or not labels:
                continue
            src += len(labels)
            cols = [pres.vector(ak * pres.basis_element(lab), d + 2 * k, w + 2 * k)
                    for lab in labels]
            if cols and cols[0]:
                r += rank(cols, len(cols[0]))
        table.append({"k": k, "source_dim": src, "target_dim": tgt, "rank": r,
                      "iso": src == tgt == r})
    return table


def generator_perversity_report(pres, module=None):
    module = module or BiGradedModule.from_ring(pres)
    levels = {
        "alpha": element_level(module, pres.alpha()),
        "beta": element_level(module, pres.beta()),
    }
    for i in range(1, 2 * pres.g + 1):
        levels[f"psi_{i}"] = element_level(module, pres.psi(i))
    return levels


def gl2_level_dims(pres, module, g):
    """dim H^k_{<=p}(M) by convolving the PGL2 levels with the epsilon exterior algebra."""
    base = {}
    top = 2 * pres.w0
    for d in pres.degrees():
        for p in range(top + 1):
            base[(d, p)] = module.perverse_level_subspace(d, p).dim
    out = {}
    for k in range(max(pres.degrees()) + 2 * g + 1):
        for p in range(top + 2 * g + 1):
            s = 0
            for j in range(min(k, 2 * g) + 1):
                if k - j in pres.degrees() and p - j >= 0:
                    s += comb(2 * g, j) * base[(k - j, min(p - j, top))]
            out[(k, p)] = s
    return out


@dataclass
class PWReport:
    g: int
    degD: int
    filtration: list = field(default_factory=list)
    primitives: list = field(default_factory=list)
    generators: dict = field(default_factory=dict)
    curious_hl: list = field(default_factory=list)
    hard_lefschetz: list = field(default_factory=list)
    survivors: dict = field(default_factory=dict)
    gl2: dict = field(default_factory=dict)

    @property
    def passed(self):
        return (all(r["equal"] for r in self.filtration)
                and all(r["equal"] for r in self.primitives)
                and all(r["iso"] for r in self.curious_hl)
                and all(r["iso"] for r in self.hard_lefschetz)
                and all(v == 2 for v in self.generators.values())
                and all(self.survivors.values())
                and all(v for k, v in self.gl2.items() if isinstance(v, bool)))

    def to_json(self):
        return {
            "g": self.g, "degD": self.degD, "pass": self.passed,
            "filtration": self.filtration, "primitives": self.primitives,
            "generators": self.generators, "curious_hl": self.curious_hl,
            "hard_lefschetz": self.hard_lefschetz, "survivors": self.survivors,
            "gl2": self.gl2,
        }


def primitive_monomial_check(pres, module):
    """Compare P_(d,w) with the span of Pi(psi^T beta^s) over monomials of that bidegree."""
    g = pres.g
    rows = []
    psi_by_t = {t: [pres.psi_monomial(T) for T in combinations(range(1, 2 * g + 1), t)]
                for t in range(2 * g + 1)}
    beta = pres.beta()
    for (d, w), labels in sorted(pres.pieces.items()):
        if w > pres.w0 or not labels:
            continue
        # 2(t + s) = w and 3t + 4s = d
        vectors = []
        for t in range(2 * g + 1):
            s2 = w - 2 * t
            if s2 < 0 or s2 % 2 or 3 * t + 2 * s2 != d:
                continue
            bs = beta ** (s2 // 2)
            for x in psi_by_t[t]:
                v = pres.vector(x * bs, d, w)
                vectors.append(module.primitive_projection(d, w, v))
        span = Subspace(len(labels), vectors)
        prim = module.primitive(d, w)
        rows.append({"d": d, "w": w, "primitive_dim": prim.dim, "monomial_span_dim": span.dim,
                     "equal": subspace_equal(span, prim)})
    return rows


def canonical_survivor_checks(pres, module):
    g = pres.g
    out = {}
    beta = pres.beta()
    alpha = pres.alpha()
    gamma = pres.gamma()
    for s in range(g):
        bs = beta ** s
        d, w = 4 * s, 2 * s
        v = pres.vector(bs, d, w)
        out[f"beta^{s}_primitive"] = bool(bs) and module.primitive(d, w).contains(v)
    top = beta ** (g - 1)
    for r in range(g):
        line = (alpha ** r) * top
        out[f"alpha^{r}beta^{g - 1}_nonzero"] = bool(line)
        other = (gamma ** r) * beta ** (g - 1 - r)
        d, w = 4 * (g - 1) + 2 * r, 2 * (g - 1) + 2 * r
        span = Subspace(pres.piece_dim(d, w), [pres.vector(line, d, w)])
        out[f"gamma^{r}beta^{g - 1 - r}_on_alpha_line"] = span.contains(pres.vector(other, d, w))
    deg = 6 * g - 6
    lvl = perverse_filtration_level(module, 3 * g - 3).get(deg)
    out["top_degree_low_level_zero"] = lvl is None or lvl.dim == 0
    out["top_degree_is_6g-6"] = pres.top_degree() == deg
    return out


def pw_check(g, degD, gl2=False):
    pres = build_ring(g, degD)
    module = BiGradedModule.from_ring(pres)
    report = PWReport(g, degD)
    top = 2 * pres.w0
    for i in range(-1, top + 1):
        weight = weight_filtration_level(pres, i)
        perverse = perverse_filtration_level(module, i)
        for d in sorted(weight):
            report.filtration.append({"d": d, "i": i, "weight_dim": weight[d].dim,
                                      "perverse_dim": perverse[d].dim,
                                      "equal": subspace_equal(weight[d], perverse[d])})
    report.primitives = primitive_monomial_check(pres, module)
    report.generators = generator_perversity_report(pres, module)
    report.curious_hl = curious_hl_check(pres)
    report.hard_lefschetz = hard_lefschetz_verify(module)
    if pres.canonical:
        report.survivors = canonical_survivor_checks(pres, module)
    if gl2:
        report.gl2 = gl2_report(pres, module)
    return report


def gl2_report(pres, module):
    g = pres.g
    levels = gl2_level_dims(pres, module, g)
    weights = gl2_extend(pres.dims(), g)
    ok = True
    for (k, p), n in levels.items():
        w_dim = sum(m for (d, w), m in weights.items() if d == k and w <= p)
        ok = ok and n == w_dim
    h1 = sum(m for (d, _), m in weights.items() if d == 1)
    eps_level = min((p for (k, p), n in levels.items() if k == 1 and n == h1), default=None)
    return {"levels_match_weights": ok, "epsilon_level": eps_level,
            "epsilon_level_is_1": eps_level == 1, "h1_dim": h1,
            "h1_is_2g": h1 == 2 * g}
