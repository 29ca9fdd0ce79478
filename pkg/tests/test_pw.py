import pytest

from pwlab.lefschetz import BiGradedModule
from pwlab.linalg import Subspace
from pwlab.pw import (curious_hl_check, element_level, generator_perversity_report,
                      perverse_filtration_level, pw_check, weight_filtration_level)
from pwlab.ring import build_ring


@pytest.fixture(scope="module")
def canon():
    pres = build_ring(2, 2)
    return pres, BiGradedModule.from_ring(pres)


def test_weight_filtration_extremes(canon):
    pres, _ = canon
    low = weight_filtration_level(pres, -1)
    high = weight_filtration_level(pres, 100)
    assert all(s.dim == 0 for s in low.values())
    assert all(s.dim == pres.dim(d=d) for d, s in high.items())
    alpha_line = weight_filtration_level(pres, 2)[2]
    assert alpha_line == Subspace(1, [pres.vector(pres.alpha(), 2, 2)])


def test_perverse_filtration_extremes(canon):
    pres, m = canon
    zero = perverse_filtration_level(m, 0)
    assert zero[0].dim == 1
    assert all(s.dim == 0 for d, s in zero.items() if d)
    full = perverse_filtration_level(m, 2 * pres.w0)
    assert all(s.dim == pres.dim(d=d) for d, s in full.items())


def test_top_degree_low_level(canon):
    _, m = canon
    assert perverse_filtration_level(m, 3)[6].dim == 0


@pytest.mark.parametrize("g,degD", [(2, 2), (2, 3)])
def test_pw_check_passes(g, degD):
    rep = pw_check(g, degD, gl2=True)
    assert rep.passed
    assert all(r["equal"] for r in rep.filtration)
    assert all(r["equal"] for r in rep.primitives)
    assert rep.gl2["epsilon_level"] == 1
    data = rep.to_json()
    assert data["pass"] is True


def test_survivors_g3():
    rep = pw_check(3, 4)
    assert rep.survivors["beta^2_primitive"]
    assert rep.survivors["gamma^2beta^0_on_alpha_line"]
    assert rep.survivors["top_degree_low_level_zero"]


def test_curious_hl(canon):
    pres, _ = canon
    table = curious_hl_check(pres)
    assert table[0]["iso"]
    k3 = table[3]
    assert (k3["source_dim"], k3["target_dim"], k3["rank"]) == (1, 1, 1)
    assert all(r["iso"] for r in table)


def test_generator_levels(canon):
    pres, m = canon
    levels = generator_perversity_report(pres, m)
    assert set(levels.values()) == {2}
    assert len(levels) == 2 + 2 * pres.g


def test_level_multiplicativity():
    pres = build_ring(2, 3)
    m = BiGradedModule.from_ring(pres)
    gens = [pres.alpha(), pres.beta(), pres.gamma()] + [pres.psi(i) for i in range(1, 5)]
    for x in gens:
        for y in gens:
            prod = x * y
            if prod:
                assert element_level(m, prod) <= element_level(m, x) + element_level(m, y)


def test_failed_report_is_not_passed():
    rep = pw_check(2, 3)
    rep.filtration[0]["equal"] = False
    assert not rep.passed
