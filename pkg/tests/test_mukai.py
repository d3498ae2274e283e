from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbihrr.arith import root_of_unity
from orbihrr.groups import symmetric_group
from orbihrr.mukai import (
    euler_pairing,
    mukai_pairing,
    mukai_vector,
    sqrt_td,
    td_ratio_sqrt,
    verify_isometry,
)
from orbihrr.stack_bg import BGInertia, CyclicBGModel, parseval_check
from orbihrr.stack_wps import WPSModel

from conftest import cyclotomics

WPS_CASES = [(1, 1), (1, 2), (2, 3), (1, 1, 2), (1, 2, 3)]

small_laurent = st.dictionaries(st.integers(-3, 6), st.integers(-3, 3), max_size=3)


def test_mukai_vector_on_p1():
    model = WPSModel((1, 1))
    v = mukai_vector(model, model.ring.one())
    # sqrt(td(h)^2) = 1 + h/2 on the line
    assert v == model.from_components([[1, Fraction(1, 2)]])


def test_euler_pairing_examples():
    model = WPSModel((1, 1))
    x = model.ring.x()
    assert euler_pairing(model, model.ring.one(), x) == 2
    assert euler_pairing(model, x, model.ring.one()) == 0
    model = WPSModel((2, 3))
    assert euler_pairing(model, model.ring.one(), model.ring.monomial(6)) == 2


def test_bg_isometry_and_pairing(s3_pool):
    model = BGInertia(s3_pool["std"].group)
    for a in s3_pool.values():
        for b in s3_pool.values():
            check = verify_isometry(model, a, b)
            assert check.ok
            assert check.lhs == (1 if a is b else 0)


@pytest.mark.parametrize("weights", WPS_CASES)
def test_wps_isometry_on_line_bundles(weights):
    model = WPSModel(weights)
    for i in range(-2, 4):
        for j in range(-2, 4):
            assert verify_isometry(model, model.ring.monomial(i), model.ring.monomial(j)).ok


@given(small_laurent, small_laurent)
def test_wps_isometry_on_random_classes(p, q):
    model = WPSModel((2, 3))
    check = verify_isometry(model, model.ring.element(p), model.ring.element(q))
    assert check.ok
    assert isinstance(check.lhs, Fraction) and check.lhs.denominator == 1


@given(cyclotomics(orders=(1, 2, 3, 4, 6, 12)), cyclotomics(orders=(1, 2, 3, 4, 6, 12)))
def test_isometry_for_complexified_classes(c, d):
    model = WPSModel((2, 3))
    x = model.ring.element({0: c, 1: 1})
    y = model.ring.element({2: d, 0: 1})
    assert verify_isometry(model, x, y).ok


@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_bmu4_mukai_equals_parseval(f, g):
    model = CyclicBGModel(4)
    check = verify_isometry(model, model.element(f), model.element(g))
    assert check.ok
    assert check.lhs == parseval_check(4, f, g).lhs


@pytest.mark.parametrize("weights", WPS_CASES)
def test_orbch_commutes_with_duality(weights):
    model = WPSModel(weights)
    x = model.ring.parse("2*x^3 - x + 1")
    assert model.orbch(x.dual()) == model.orbch(x).involution()


@pytest.mark.parametrize("weights", WPS_CASES)
def test_mukai_vector_of_dual(weights):
    model = WPSModel(weights)
    x = model.ring.parse("x^2 - 3")
    lhs = mukai_vector(model, x.dual())
    rhs = mukai_vector(model, x).involution() * td_ratio_sqrt(model)
    assert lhs == rhs


@given(cyclotomics())
def test_pairing_is_sesquilinear(c):
    model = WPSModel((1, 2, 3))
    v = mukai_vector(model, model.ring.parse("x + 2"))
    w = mukai_vector(model, model.ring.parse("x^3 - x^-1"))
    base = mukai_pairing(model, v, w)
    scale = model.constant(c)
    assert mukai_pairing(model, v * scale, w) == c.conjugate() * base
    assert mukai_pairing(model, v, w * scale) == c * base


def test_sqrt_td_squares_to_td():
    model = WPSModel((2, 3))
    assert sqrt_td(model) * sqrt_td(model) == model.td


def test_bg_correction_factors_are_trivial():
    model = BGInertia(symmetric_group(3))
    assert td_ratio_sqrt(model) == model.one()
    assert model.e_rho == model.one()


def test_euler_pairing_is_cyclotomic_for_complex_input():
    model = CyclicBGModel(3)
    z = root_of_unity(3)
    x = model.element([z, 0, 0])
    value = euler_pairing(model, model.ring.one(), x)
    assert value == z
