from fractions import Fraction

import pytest

import ncfin


def test_hom_counts():
    assert ncfin.hom_count("N", 2, 2) == 6
    assert ncfin.hom_count("F", 3, 2) == 8
    assert len(ncfin.hom("FI", 1, 2)) == 2
    assert ncfin.hom_count("N", 20, 20) > 2**64


def test_morphisms():
    swap = ncfin.Morphism("2->2: 2,1")
    assert str(ncfin.compose("N", swap, swap)) == "2->2: 1,2 | orders: 1:(1); 2:(2)"
    lifted = ncfin.lift("3->2: 1,1,2", mode="delta")
    assert lifted.fibers == [[1, 2], [3]]
    assert ncfin.in_category("Delta", lifted)
    with pytest.raises(ValueError):
        ncfin.Morphism("2->1: 1,3")


def test_simple_module_character_fit():
    c2 = ncfin.simple("C", k=2, max_level=6)
    assert c2.dims[:5] == [0, 0, 1, 3, 6]
    assert ncfin.fit_character_polynomial(c2, 2, [1, 2, 3, 4], [5, 6]) == "C(X1,2) + X2"
    assert ncfin.Module.from_text(c2.to_text()).to_text() == c2.to_text()


def test_dold_kan():
    c1 = ncfin.simple("C", k=1, max_level=6).restrict("psi")
    mult, binomial, _ = ncfin.dim_polynomial(c1)
    assert mult[:2] == [1, 1] and not any(mult[2:])
    assert binomial == "C(n-1,0) + C(n-1,1)"
    back = ncfin.realize(ncfin.conormalize(c1), 6)
    assert ncfin.conormalize(back) == ncfin.conormalize(c1)


def test_invariants_and_replication():
    h1 = ncfin.arnold_module(1, 6)
    assert [ncfin.invariant_dim(h1, n) for n in range(1, 6)] == [0, 1, 1, 1, 1]
    assert ncfin.replication_invertible(h1, 2, 2)
    assert not ncfin.replication_invertible(ncfin.simple("C", k=3, max_level=6), 2, 2)
    p = ncfin.averaging_projector(ncfin.simple("C", k=1, max_level=3), 3)
    assert p[0] == [Fraction(1, 3)] * 3


def test_arnold():
    assert ncfin.arnold_dims(2, 5) == [0, 0, 2, 11, 35]
    assert ncfin.arnold_image(1, "3->2: 1,2,1", "1 * w(2,3)") == "1 * w(1,2)"
    table = dict(ncfin.character(ncfin.arnold_module(1, 3), 3))
    assert table[(1, 1, 1)] == 3
    assert table[(2, 1)] == 1
