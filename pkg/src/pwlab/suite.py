"""Batch verification within resource bounds; each item returns a plain dict."""

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from math import comb

from .braid import (IntersectionData, Partition, build_rep, closed_form_invariants,
                    even_partitions, exterior_invariants_dim, lemma_linealg_check,
                    match_jacobian_bound, picard_lefschetz_twist, tabulated_action)
from .exterior import lambda0_basis
from .jacobian import (SingularType, blowup_poset_sum, compactified_jacobian_betti,
                       poincare_polynomial)
from .pw import pw_check
from .ring import vanishing_check
from .sl2 import variant_consistency, variant_dims


def ring_cases(max_g, max_degD):
    return [(g, D) for g in range(2, max_g + 1) for D in range(2 * g - 2, max_degD + 1)]


def check_ring_case(g, degD):
    rep = pw_check(g, degD, gl2=True)
    filt = all(r["equal"] for r in rep.filtration)
    rows = vanishing_check(g, degD)
    out = {
        "pw": filt and all(r["equal"] for r in rep.primitives),
        "curious_hl": all(r["iso"] for r in rep.curious_hl),
        "generators": all(v == 2 for v in rep.generators.values()) and rep.gl2["epsilon_level_is_1"],
        "vanishing": all(r["predicted_zero"] == r["is_zero"] for r in rows),
    }
    if degD == 2 * g - 2:
        out["survivors"] = all(rep.survivors.values())
    return {"item": f"ring g={g} degD={degD}", "checks": out, "pass": all(out.values())}


def check_lambda0(g):
    ok = all(len(lambda0_basis(g, k)) == comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)
             for k in range(g + 1))
    return {"item": f"lambda0 g={g}", "checks": {"dims": ok}, "pass": ok}


def check_braid(max_d):
    bad = []
    for parts in even_partitions(max_d):
        p = Partition(parts)
        for v in ("conn", "disc"):
            if v == "disc" and p.omega < 1:
                continue
            if exterior_invariants_dim(build_rep(p, v)) != closed_form_invariants(p, v):
                bad.append([list(parts), v])
    return {"item": f"braid d<={max_d}", "checks": {"closed_form": not bad}, "failures": bad,
            "pass": not bad}


def check_linealg(max_m):
    bad = []
    for m in range(1, max_m + 1):
        cases = [(1, None), (2, None)] + [(3, t) for t in range(1, 2 * m, 2)]
        for case, t in cases:
            r = lemma_linealg_check(m, case, t)
            if not (r["match"] and r["omega_fixed"] and r["omega_power_nonzero"]):
                bad.append(r)
    return {"item": f"linealg m<={max_m}", "checks": {"cases": not bad}, "failures": bad,
            "pass": not bad}


def check_picard_lefschetz(max_r):
    ok = all(picard_lefschetz_twist(IntersectionData(r), i) == tabulated_action(r, i)
             for r in range(1, max_r + 1) for i in range(1, 2 * r))
    return {"item": f"picard-lefschetz r<={max_r}", "checks": {"tabulated": ok}, "pass": ok}


def singular_types(max_delta_sum, max_gtilde):
    def compositions(total):
        # multisets of positive deltas with the given sum, as non-increasing tuples
        def rec(n, cap):
            if n == 0:
                yield ()
                return
            for a in range(min(n, cap), 0, -1):
                for rest in rec(n - a, a):
                    yield (a,) + rest
        return list(rec(total, total))

    out = []
    for gt in range(max_gtilde + 1):
        for so in range(max_delta_sum + 1):
            for se in range(max_delta_sum - so + 1):
                for odd, even in product(compositions(so), compositions(se)):
                    out.append(SingularType(odd, even, gt))
    return out


def check_jacobian(max_delta_sum, max_gtilde):
    bad = []
    for t in singular_types(max_delta_sum, max_gtilde):
        closed = compactified_jacobian_betti(t)
        if blowup_poset_sum(t) != closed or sum(poincare_polynomial(t)) != closed:
            bad.append([list(t.odd_points), list(t.even_points), t.g_tilde])
    return {"item": f"jacobian delta<={max_delta_sum} gtilde<={max_gtilde}",
            "checks": {"poset_and_poincare": not bad}, "failures": bad, "pass": not bad}


def check_match(max_d, genera):
    bad = [[g, list(p)] for g in genera for p in even_partitions(max_d)
           if not match_jacobian_bound(g, p)]
    return {"item": f"match d<={max_d} g in {list(genera)}", "checks": {"match": not bad},
            "failures": bad, "pass": not bad}


def check_sl2(g):
    r = variant_consistency(g)
    checks = {k: v for k, v in r.items() if isinstance(v, bool)}
    checks["g2_degree5_is_30"] = g != 2 or variant_dims(2).dims.get(5) == 30
    return {"item": f"sl2 g={g}", "checks": checks, "pass": all(checks.values())}


def plan(max_g, max_degD, max_d):
    """List of (function, args) within the bounds; empty when any bound is 0."""
    if min(max_g, max_degD, max_d) <= 0:
        return []
    items = [(check_ring_case, c) for c in ring_cases(max_g, max_degD)]
    items += [(check_lambda0, (g,)) for g in range(1, max_g + 1)]
    items += [(check_sl2, (g,)) for g in range(2, max_g + 1)]
    if max_d >= 2:
        items.append((check_braid, (max_d,)))
        items.append((check_linealg, (max_d // 2,)))
        items.append((check_picard_lefschetz, (max_d // 2 + 2,)))
        items.append((check_jacobian, (min(max_d, 6), min(max_g, 3))))
        genera = tuple(g for g in (2, 3) if g <= max_g)
        if genera:
            items.append((check_match, (max_d, genera)))
    return items


def _run(item):
    fn, args = item
    return fn(*args)


def thread_cap():
    try:
        return max(1, int(os.environ.get("PW_LAB_THREADS", "1")))
    except ValueError:
        return 1


def verify_all(max_g, max_degD, max_d, workers=None):
    items = plan(max_g, max_degD, max_d)
    workers = workers or thread_cap()
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run, items))
    else:
        results = [_run(it) for it in items]
    results.sort(key=lambda r: r["item"])
    return {"bounds": {"max_g": max_g, "max_degD": max_degD, "max_d": max_d},
            "items": results, "pass": all(r["pass"] for r in results)}
