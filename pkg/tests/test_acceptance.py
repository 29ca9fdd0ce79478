"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import time
from math import comb

import pytest

from pwlab.braid import (IntersectionData, Partition, build_rep, closed_form_invariants,
                         even_partitions, exterior_invariants_dim, lemma_linealg_check,
                         match_jacobian_bound, picard_lefschetz_twist, tabulated_action)
from pwlab.exterior import lambda0_basis
from pwlab.jacobian import (blowup_poset_sum, compactified_jacobian_betti, poincare_polynomial)
from pwlab.pw import pw_check
from pwlab.ring import vanishing_check
from pwlab.sl2 import e_var_expansion, e_var_printed_expansion, e_var_product_form, is_palindromic, variant_consistency, variant_dims
from pwlab.suite import singular_types

POLE = [(2, 3), (2, 4), (3, 5)]
CANONICAL = [(2, 2), (3, 4)]


def verdict(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def reports():
    out = {}
    for case in POLE + CANONICAL:
        start = time.perf_counter()
        out[case] = (pw_check(*case, gl2=True), time.perf_counter() - start)
    return out


def test_criterion_01_pw_pole_case(reports):
    bad = []
    for case in POLE:
        rep, secs = reports[case]
        if not all(r["equal"] for r in rep.filtration) or not all(r["equal"] for r in rep.primitives) or secs > 300:
            bad.append(case)
    verdict(1, "weight = perverse filtration, pole case", not bad, f"cases {POLE}, failures {bad}")


def test_criterion_02_pw_canonical_case(reports):
    bad = []
    for case in CANONICAL:
        rep, secs = reports[case]
        g = case[0]
        ok = (all(r["equal"] for r in rep.filtration)
              and all(r["equal"] for r in rep.primitives)
              and rep.survivors[f"beta^{g - 1}_primitive"]
              and rep.survivors["top_degree_low_level_zero"]
              and all(rep.survivors.values())
              and secs <= 600)
        if not ok:
            bad.append(case)
    verdict(2, "weight = perverse filtration, canonical case with survivors", not bad,
            f"cases {CANONICAL}, failures {bad}")


def test_criterion_03_curious_hard_lefschetz(reports):
    bad = [case for case in POLE + CANONICAL
           if not all(r["iso"] for r in reports[case][0].curious_hl)
           or len(reports[case][0].curious_hl) != reports[case][0].curious_hl[-1]["k"] + 1]
    verdict(3, "alpha^k is bijective between weights w0-k and w0+k", not bad, f"failures {bad}")


def test_criterion_04_generator_levels(reports):
    bad = []
    for case in POLE + CANONICAL:
        rep = reports[case][0]
        if set(rep.generators.values()) != {2} or rep.gl2["epsilon_level"] != 1:
            bad.append(case)
    verdict(4, "alpha, psi_i, beta at level 2; epsilon_i at level 1", not bad, f"failures {bad}")


def test_criterion_05_vanishing_relations():
    cases = [(g, D) for g in (2, 3) for D in range(2 * g - 2, 2 * g + 2)]
    bad, count = [], 0
    for case in cases:
        rows = vanishing_check(*case)
        count += len(rows)
        if not rows or any(r["predicted_zero"] != r["is_zero"] for r in rows):
            bad.append(case)
    verdict(5, "beta^s psi^t vanishing rule, both cases, g <= 3", not bad,
            f"{count} monomials over {cases}, failures {bad}")


def test_criterion_06_braid_invariants():
    start = time.perf_counter()
    bad = []
    for parts in even_partitions(8):
        p = Partition(parts)
        for v in ("conn", "disc"):
            if v == "disc" and p.omega < 1:
                continue
            if exterior_invariants_dim(build_rep(p, v)) != closed_form_invariants(p, v):
                bad.append((parts, v))
    for m in range(1, 5):
        for case, t in [(1, None), (2, None)] + [(3, t) for t in range(1, 2 * m, 2)]:
            r = lemma_linealg_check(m, case, t)
            if not (r["match"] and r["omega_fixed"] and r["omega_power_nonzero"]):
                bad.append((m, case, t))
    secs = time.perf_counter() - start
    verdict(6, "brute-force invariants = closed forms; linear-algebra model cases", not bad and secs < 120,
            f"{secs:.1f}s, failures {bad}")


def test_criterion_07_picard_lefschetz():
    bad = [(r, i) for r in range(1, 7) for i in range(1, 2 * r)
           if picard_lefschetz_twist(IntersectionData(r), i) != tabulated_action(r, i)]
    verdict(7, "Picard-Lefschetz twists = tabulated action, r <= 6", not bad, f"failures {bad}")


def test_criterion_08_jacobian_strata():
    types = singular_types(6, 3)
    bad = [t for t in types
           if blowup_poset_sum(t) != compactified_jacobian_betti(t)
           or sum(poincare_polynomial(t)) != compactified_jacobian_betti(t)]
    verdict(8, "poset sum = closed form = Poincare polynomial at 1", not bad,
            f"{len(types)} singular types, failures {bad}")


def test_criterion_09_support_shadow():
    parts = even_partitions(8)
    bad = [(g, p) for g in (2, 3) for p in parts if not match_jacobian_bound(g, p)]
    verdict(9, "local invariant totals = compactified Jacobian Betti counts", not bad,
            f"{len(parts)} partitions x g in (2, 3), failures {bad}")


def test_criterion_10_sl2_variant():
    bad = []
    for g in range(2, 9):
        prod_form = e_var_product_form(g)
        if prod_form != e_var_expansion(g) or prod_form != -e_var_printed_expansion(g):
            bad.append((g, "forms"))
        if not is_palindromic(prod_form, g):
            bad.append((g, "palindromy"))
        cons = variant_consistency(g)
        if not (cons["p_equals_w"] and cons["e_var_matches_dims"] and cons["lefschetz_pairing"]):
            bad.append((g, "consistency"))
    if variant_dims(2).dims != {5: 30}:
        bad.append((2, "dims"))
    verdict(10, "E_var closed forms agree and are palindromic; dims; 2p = w", not bad,
            "expansion compared with the (-1)^k sign of odd degrees; the printed sum equals -E_var"
            f"; failures {bad}")


def test_criterion_11_lambda0_dims():
    bad = [(g, k) for g in range(1, 6) for k in range(g + 1)
           if len(lambda0_basis(g, k)) != comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)]
    verdict(11, "dim of the primitive part = C(2g,k) - C(2g,k-2) by kernel rank, g <= 5", not bad,
            f"failures {bad}")
