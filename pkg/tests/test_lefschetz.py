import pytest
from hypothesis import given, settings, strategies as st

from pwlab.lefschetz import (BiGradedModule, delta, element_delta, hard_lefschetz_verify,
                             isobaric_pieces, primitive_basis)
from pwlab.linalg import Subspace, matvec
from pwlab.ring import build_ring

CASES = [(2, 2), (2, 3), (3, 4), (3, 5)]


def module(g, degD):
    return BiGradedModule.from_ring(build_ring(g, degD))


def test_y_of_unit_is_alpha():
    pres = build_ring(2, 2)
    m = module(2, 2)
    assert m.apply_y(0, 0, [1]) == pres.vector(pres.alpha(), 2, 2)


@pytest.mark.parametrize("g,degD", CASES)
def test_hard_lefschetz(g, degD):
    report = hard_lefschetz_verify(module(g, degD))
    assert report[0]["l"] == 0
    assert all(r["iso"] for r in report)


def test_hard_lefschetz_flags_a_broken_module():
    # weight 0 and weight 2 lines with Y = 0 around w0 = 1
    m = BiGradedModule({(0, 0): 1, (2, 2): 1}, {(0, 0): [[0]]}, 1)
    assert not all(r["iso"] for r in hard_lefschetz_verify(m))


@pytest.mark.parametrize("g,degD", CASES)
def test_primitive_dims(g, degD):
    m = module(g, degD)
    for d, w in m.dims:
        p = m.primitive(d, w)
        if w > m.w0:
            assert p.dim == 0
        else:
            assert p.dim == m.dim(d, w) - m.dim(d - 2, w - 2)
    assert primitive_basis(m, 0).dim == 1
    assert primitive_basis(m, 2 * m.w0).dim == 0


@pytest.mark.parametrize("g,degD", CASES)
def test_isobaric_completeness(g, degD):
    m = module(g, degD)
    pieces = isobaric_pieces(m)
    assert pieces[(0, 0)] == 1
    assert sum(pieces.values()) == sum(m.dims.values())
    for (w, j) in pieces:
        assert j <= m.w0 - w
    # Y^j is injective on P_w for j <= w0 - w
    for d, w in m.dims:
        p = m.primitive(d, w)
        if p.dim:
            for j in range(m.w0 - w + 1):
                ym = m.y_power(d, w, j)
                assert Subspace(len(ym), [matvec(ym, v) for v in p.basis]).dim == p.dim


def test_projection_examples():
    pres = build_ring(2, 2)
    m = module(2, 2)
    assert not any(m.primitive_projection(2, 2, pres.vector(pres.alpha(), 2, 2)))
    beta = pres.vector(pres.beta(), 4, 2)
    assert m.primitive_projection(4, 2, beta) == beta


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CASES), st.data())
def test_projection_properties(case, data):
    m = module(*case)
    d, w = data.draw(st.sampled_from(sorted(m.dims)))
    n = m.dim(d, w)
    v = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    p = m.primitive_projection(d, w, v)
    assert m.primitive_projection(d, w, p) == p
    assert m.primitive(d, w).contains(p)
    rest = [a - b for a, b in zip(v, p)]
    if any(rest):
        src = m.dim(d - 2, w - 2)
        image = Subspace(n, [m.apply_y(d - 2, w - 2, e) for e in _unit_vectors(src)])
        assert image.contains(rest)


def _unit_vectors(n):
    return [[1 if i == j else 0 for i in range(n)] for j in range(n)]


@pytest.mark.parametrize("g,degD", CASES)
def test_perversity_window(g, degD):
    m = module(g, degD)
    for d, w in m.dims:
        for e in _unit_vectors(m.dim(d, w)):
            lvl = m.perverse_level(d, w, e)
            assert -(-d // 2) <= lvl <= d


@pytest.mark.parametrize("g,degD", [(2, 3), (3, 4)])
def test_non_mixing(g, degD):
    m = module(g, degD)
    for d, w in m.dims:
        if w > m.w0:
            continue
        # u in the level-w part of piece (d, w) and killed by Y^(w0 - w + 1) is primitive
        kernel = m.primitive(d, w)
        for v in kernel.basis:
            assert not any(m.apply_y(d, w, v, m.w0 - w + 1))
            assert m.perverse_level(d, w, v) == w


def test_delta():
    pres = build_ring(3, 5)
    # beta^2 psi_1 psi_2 has d = 14, w = 8 (it vanishes here since 2s + t >= deg D)
    assert delta(14, 8) == 6
    x = pres.beta() * pres.psi(1) * pres.psi(2)
    assert x.bidegree() == (10, 6)
    assert element_delta(x) == 4
    assert element_delta(pres.alpha() * x) == 4
    assert element_delta(pres.psi(1) * pres.psi(2) * pres.psi(3)) == 3
