from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from orbihrr.arith import as_cyclotomic, root_of_unity
from orbihrr.rings import (
    KRing,
    LaurentPoly,
    NotInvertibleError,
    RingMismatchError,
    SectorClass,
    exp_line,
    k_euler_class,
    kring_new,
    lambda_power,
    parse_kclass,
    parse_sector_class,
    todd_coefficients,
    todd_line,
)

from conftest import cyclotomics

laurent_terms = st.dictionaries(st.integers(-8, 12), st.integers(-4, 4), max_size=5)


def bernoulli_minus(n):
    """B_0..B_n with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0."""
    b = [Fraction(1)]
    for k in range(1, n + 1):
        b.append(-sum(comb(k + 1, j) * b[j] for j in range(k)) / (k + 1))
    return b


# -- K-rings -------------------------------------------------------------------------


def test_presentation_and_rank():
    ring = kring_new([2, 3])
    assert ring.presentation() == "Z[x]/<(x^2 - 1)(x^3 - 1)>"
    assert ring.degree == 5
    assert str(ring.relation) == "x^5 - x^3 - x^2 + 1"


def test_reduction_of_x5():
    ring = kring_new([2, 3])
    assert ring.monomial(5) == ring.parse("x^3 + x^2 - 1")
    assert ring.monomial(5).coefficients() == {3: 1, 2: 1, 0: -1}


def test_inverse_of_x_is_in_window():
    ring = kring_new([2, 3])
    xinv = ring.x().inverse()
    assert xinv * ring.x() == ring.one()
    assert xinv == ring.monomial(-1)
    assert all(0 <= e < 5 for e in xinv.coefficients())


def test_dual_example():
    ring = kring_new([2, 3])
    x = ring.x()
    assert (x * x - x).dual() == ring.monomial(-2) - ring.monomial(-1)


def test_free_ring_is_laurent():
    ring = KRing.free()
    assert ring.is_free
    assert ring.monomial(-3) * ring.monomial(3) == ring.one()
    assert ring.monomial(-3).coefficients() == {-3: 1}


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatchError):
        kring_new([2, 3]).x() + kring_new([1, 2]).x()


@pytest.mark.parametrize("weights", [(1, 1), (2, 3), (1, 2, 3), (4, 6), (2, 2, 5)])
@given(p=laurent_terms, q=laurent_terms)
def test_canonical_form_is_unique_mod_relation(weights, p, q):
    ring = kring_new(weights)
    pp = LaurentPoly(p)
    shifted = pp + ring.relation * LaurentPoly(q)
    assert ring.reduce(shifted) == ring.reduce(pp)
    assert all(0 <= e < ring.degree for e in ring.reduce(pp).terms)


@given(p=laurent_terms, q=laurent_terms, r=laurent_terms)
def test_kring_is_a_commutative_ring(p, q, r):
    ring = kring_new([2, 3])
    a, b, c = ring.element(p), ring.element(q), ring.element(r)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b).dual() == a.dual() * b.dual()
    assert a.dual().dual() == a


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_monomials_multiply(d, e):
    ring = kring_new([1, 2, 3])
    assert ring.monomial(d) * ring.monomial(e) == ring.monomial(d + e)


def test_non_unit_has_no_inverse():
    ring = kring_new([2, 3])
    with pytest.raises(NotInvertibleError):
        (ring.one() - ring.x()).inverse()


def test_parse_round_trip():
    ring = kring_new([2, 3])
    a = ring.parse("2*x^3 - x^-1 + 1/2")
    assert parse_kclass(ring, str(a)) == a


# -- lambda operations and e^K --------------------------------------------------------


def test_euler_class_examples():
    ring = kring_new([2, 3])
    assert k_euler_class(ring, [0]) == ring.zero()
    assert k_euler_class(ring, [1]) == ring.one() - ring.monomial(-1)
    # x^2 - x^2 cancels before anything is inverted
    assert k_euler_class(ring, [(1, 2), (-1, 2)]) == ring.one()


def test_euler_class_rejects_non_invertible_negative_term():
    ring = kring_new([2, 3])
    with pytest.raises(NotInvertibleError):
        k_euler_class(ring, [(-1, 1)])


def test_euler_class_negative_term_in_free_ring_is_blocked():
    # 1 - x^-1 is never a unit in a Laurent ring either
    with pytest.raises(NotInvertibleError):
        k_euler_class(KRing.free(), [(-1, 3)])


@given(st.lists(st.integers(-4, 6), max_size=4), st.lists(st.integers(-4, 6), max_size=4))
def test_euler_class_is_multiplicative(u, v):
    ring = kring_new([1, 3])
    assert k_euler_class(ring, u + v) == k_euler_class(ring, u) * k_euler_class(ring, v)


@given(st.lists(st.integers(-5, 5), max_size=4))
def test_euler_class_matches_alternating_lambda(u):
    ring = kring_new([2, 3])
    dual_exps = [-b for b in u]
    alt = ring.zero()
    for i in range(len(u) + 1):
        alt = alt + lambda_power(ring, dual_exps, i) * (-1) ** i
    assert k_euler_class(ring, u) == alt


def test_lambda_power_of_two_lines():
    ring = KRing.free()
    assert lambda_power(ring, [1, 2], 2) == ring.monomial(3)
    assert lambda_power(ring, [1, 2], 1) == ring.monomial(1) + ring.monomial(2)
    assert lambda_power(ring, [1, 2], 3) == ring.zero()


# -- truncated series ---------------------------------------------------------------


def test_todd_line_dim_two():
    assert todd_line(SectorClass.h(2)) == SectorClass(2, [1, Fraction(1, 2), Fraction(1, 12)])


@pytest.mark.parametrize("n", range(0, 12))
def test_todd_coefficients_are_signed_bernoulli(n):
    b = bernoulli_minus(n)
    expected = tuple((-1) ** k * b[k] / factorial(k) for k in range(n + 1))
    assert todd_coefficients(n) == expected


def test_sqrt_of_one_plus_h():
    assert SectorClass(2, [1, 1]).sqrt() == SectorClass(2, [1, Fraction(1, 2), Fraction(-1, 8)])


def test_sqrt_needs_unit_constant():
    with pytest.raises(ValueError):
        SectorClass(2, [4, 1]).sqrt()


def test_series_inverse_with_root_of_unity():
    z = root_of_unity(3, 1)
    f = 1 - exp_line(SectorClass.h(1, -1)) * z.inverse()
    c0 = 1 - z.inverse()
    assert f.inverse() == SectorClass(1, [c0.inverse(), -(z.inverse()) / (c0 * c0)])
    assert f * f.inverse() == SectorClass.one(1)


def test_involution_example():
    z = root_of_unity(4, 1)
    v = SectorClass(2, [z, 1, 1])
    assert v.involution() == SectorClass(2, [z.conjugate(), -1, 1])


sector_series = st.builds(
    lambda c0, rest: SectorClass(3, [c0] + rest),
    cyclotomics().filter(bool),
    st.lists(cyclotomics(), max_size=3),
)


@given(sector_series, sector_series)
def test_series_ring_laws(a, b):
    assert a * a.inverse() == SectorClass.one(3)
    assert (a * b).involution() == a.involution() * b.involution()
    assert a.involution().involution() == a


@given(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=3, max_size=3))
def test_sqrt_squares_back(rest):
    a = SectorClass(3, [1] + rest)
    assert a.sqrt() * a.sqrt() == a


def test_exp_line_is_a_homomorphism():
    h = SectorClass.h(4)
    assert exp_line(h * 2) == exp_line(h) * exp_line(h)
    assert exp_line(h * 3) * exp_line(h * -3) == SectorClass.one(4)


def test_parse_sector_class():
    assert parse_sector_class("1 + 1/2*h - z3*h^2", 2) == SectorClass(2, [1, Fraction(1, 2), -root_of_unity(3)])
    assert parse_sector_class("h^3", 2) == SectorClass(2)
