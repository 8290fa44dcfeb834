import pytest
from hypothesis import given
from hypothesis import strategies as st

from clustcolor.bounds import (BoundParams, adov_bound, bound_table, combine_bound, ej_bound,
                               main_constants, necklace_bound, outgrowth_bound, recolor_budget)


def test_ej_planar_unit_degree():
    value = ej_bound(1, 0)
    assert value == 15 ** 40
    assert len(str(value)) == 48


def test_ej_formula_small_genus():
    assert ej_bound(2, 1) == 10 * 30 ** (72 * 2)


@given(st.integers(1, 6), st.integers(0, 3))
def test_ej_strictly_increasing(delta, g):
    v = ej_bound(delta, g)
    assert ej_bound(delta + 1, g) > v
    assert ej_bound(delta, g + 1) > v
    assert ej_bound(delta, g) == v


def test_simple_formulas():
    assert adov_bound(3, 3) == 216
    assert recolor_budget(2, 3, 4) == 26
    assert recolor_budget(0, 5, 5) == 0
    assert necklace_bound(2) == 2 and necklace_bound(5) == 4
    assert combine_bound(3, 0) == 2 and combine_bound(4, 2) == 11
    assert outgrowth_bound(1, 1, 1) == 48
    assert outgrowth_bound(2, 3, 2) == 48 * 16 * 3 * 32


@pytest.mark.parametrize("call", [lambda: ej_bound(0, 0), lambda: adov_bound(0, 1),
                                  lambda: combine_bound(2, 1), lambda: recolor_budget(-1, 1, 1),
                                  lambda: main_constants(-1, 1, 1, 0)])
def test_domain_errors(call):
    with pytest.raises(ValueError):
        call()


def test_eta_vanishes_without_vortices():
    assert main_constants(0, 1, 3, 0, d=7).eta == 0
    assert main_constants(0, 5, 1, 0).eta == 0


@given(st.integers(0, 4), st.integers(1, 4), st.integers(1, 5), st.integers(2, 50))
def test_m_scales_by_fourth_power(rho, theta, delta, D):
    base = main_constants(rho, theta, delta, 0, d=1)
    scaled = main_constants(rho, theta, delta, 0, d=D)
    assert scaled.M == base.M * D ** 4
    assert scaled.eta == base.eta * D ** 4


def test_injected_m_feeds_eta():
    mc = main_constants(2, 3, 2, 0, d=1, M=10)
    assert mc.M == 10
    assert mc.eta == 2000 * 2 * 27 * 10 * 64


def test_genuine_d_is_ej():
    assert main_constants(1, 1, 1, 0).d == 15 ** 40


def test_bound_table_rows():
    rows = bound_table(BoundParams(delta=3, w=3))
    by_name = {r["name"]: r for r in rows}
    assert by_name["adov"]["value"] == 216
    assert by_name["eta"]["value"] == 0
    assert all(r["digits"] == len(str(r["value"])) for r in rows if r["value"] is not None)
    assert bound_table(BoundParams(q=2))[3]["value"] is None
    assert bound_table(BoundParams()) == rows
