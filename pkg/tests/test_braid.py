from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from pwlab.braid import (BraidRep, IntersectionData, Partition, build_rep, chain_twist,
                         closed_form_invariants, even_partitions, exterior_invariants_dim,
                         invariant_dims_by_degree, lemma_linealg_check, match_jacobian_bound,
                         picard_lefschetz_twist, tabulated_action, total_local_invariants)
from pwlab.linalg import inverse, matmul, matvec


def test_partition_normalizes_order():
    p = Partition((2, 3, 1))
    assert p.parts == (3, 1, 2)
    assert (p.d, p.omega, p.epsilon) == (6, 1, 1)
    assert p.partial_sums() == [0, 3, 4, 6]
    assert p.generator_indices() == [1, 2, 5]
    with pytest.raises(ValueError):
        Partition((3,))


def test_even_partitions_counts():
    assert len(even_partitions(8)) == 2 + 5 + 11 + 22


def test_small_reps():
    assert build_rep((1, 1), "disc").dimension == 0
    conn = build_rep((1, 1), "conn")
    assert conn.dimension == 2 and conn.generators == []
    assert exterior_invariants_dim(conn) == 4
    two = build_rep((2,), "conn")
    (j, t), = two.generators
    assert j == 1
    assert matvec(t, [1, 0]) == [1, 1]      # lambda_0 -> lambda_0 + lambda_1
    assert matvec(t, [0, 1]) == [0, 1]
    assert exterior_invariants_dim(two) == 3
    with pytest.raises(ValueError):
        build_rep((2,), "disc")
    with pytest.raises(ValueError):
        build_rep((2,), "other")


def test_trivial_group():
    rep = BraidRep("model", 3, [])
    assert exterior_invariants_dim(rep) == 8


def test_closed_form_examples():
    assert closed_form_invariants((1, 1), "disc") == 1
    assert closed_form_invariants((3, 1), "conn") == 8
    assert closed_form_invariants((2, 2), "conn") == 9
    with pytest.raises(ValueError):
        closed_form_invariants((2, 2), "disc")


def test_totals():
    assert total_local_invariants(2, (1, 1), "disc") == 256
    assert total_local_invariants(2, (2,), "conn") == 192
    assert total_local_invariants(2, (3, 1), "disc") == total_local_invariants(2, (3, 1), "conn")
    assert match_jacobian_bound(2, (2,))
    assert match_jacobian_bound(2, (1, 1))
    assert match_jacobian_bound(3, (3, 1, 2))


def test_twists_are_invertible():
    for parts in even_partitions(6):
        for v in ("conn", "disc"):
            if v == "disc" and Partition(parts).omega < 1:
                continue
            for _, t in build_rep(parts, v).generators:
                inverse(t)


def test_boundary_is_fixed():
    for r in range(1, 6):
        basis = tuple(range(1, 2 * r))
        boundary = [Fraction(j % 2) for j in basis]
        for i in basis:
            assert matvec(chain_twist(basis, i), boundary) == boundary


@pytest.mark.parametrize("r", range(1, 5))
def test_picard_lefschetz(r):
    data = IntersectionData(r)
    q = data.pairing()
    assert all(q[a][b] == -q[b][a] for a in range(data.size) for b in range(data.size))
    for i in range(1, 2 * r):
        t = picard_lefschetz_twist(data, i)
        assert t == tabulated_action(r, i)
        e = [0] * data.size
        e[i - 1] = 1
        assert matvec(t, e) == e
    with pytest.raises(ValueError):
        picard_lefschetz_twist(data, 2 * r)


def test_linealg_examples():
    assert lemma_linealg_check(1, 1)["invariants"] == 2
    assert lemma_linealg_check(2, 2)["invariants"] == 5
    assert lemma_linealg_check(2, 3, 1)["invariants"] == 8
    with pytest.raises(ValueError):
        lemma_linealg_check(2, 3, 2)


def _quotient_rep(p, eliminate):
    """Oracle: T_j on span(lambda_1..lambda_{d-1}) modulo the odd-index sum, with lambda_eliminate solved out."""
    d = p.d
    keep = [j for j in range(1, d) if j != eliminate]
    pos = {j: k for k, j in enumerate(keep)}

    def express(j):
        v = [Fraction(0)] * len(keep)
        if j == eliminate:
            for o in range(1, d, 2):
                if o != eliminate:
                    v[pos[o]] -= 1
        else:
            v[pos[j]] += 1
        return v

    gens = []
    for i in p.generator_indices():
        cols = []
        for j in keep:
            img = express(j)
            if j == i + 1:
                img = [a - b for a, b in zip(img, express(i))]
            elif j == i - 1:
                img = [a + b for a, b in zip(img, express(i))]
            cols.append(img)
        gens.append((i, [[cols[c][r] for c in range(len(keep))] for r in range(len(keep))]))
    return BraidRep("disc", len(keep), gens, tuple(keep))


@pytest.mark.parametrize("parts", [(1, 1), (3, 1), (1, 1, 2), (3, 3), (1, 1, 1, 1), (3, 1, 2), (5, 1)])
def test_disc_quotient_oracle(parts):
    p = Partition(parts)
    expected = exterior_invariants_dim(build_rep(p, "disc"))
    for odd in range(1, p.d, 2):
        assert exterior_invariants_dim(_quotient_rep(p, odd)) == expected


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_reordering_within_blocks(parts):
    if sum(parts) % 2:
        parts = parts + [1]
    if sum(parts) > 8:
        return
    odd = [a for a in parts if a % 2]
    even = [a for a in parts if a % 2 == 0]
    base = exterior_invariants_dim(build_rep(parts, "conn"))
    for o in set(permutations(odd)):
        for e in set(permutations(even)):
            assert exterior_invariants_dim(build_rep(o + e, "conn")) == base


def test_per_degree_breakdown_sums():
    rep = build_rep((3, 1, 2), "conn")
    dims = invariant_dims_by_degree(rep)
    assert len(dims) == rep.dimension + 1
    assert dims[0] == 1
    assert sum(dims) == closed_form_invariants((3, 1, 2), "conn")


def test_functoriality_on_a_product():
    from pwlab.exterior import exterior_power_matrix
    rep = build_rep((4,), "conn")
    (_, a), (_, b) = rep.generators[:2]
    for k in range(rep.dimension + 1):
        assert exterior_power_matrix(matmul(a, b), k) == matmul(exterior_power_matrix(a, k),
                                                                exterior_power_matrix(b, k))
