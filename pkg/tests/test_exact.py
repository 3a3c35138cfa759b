"""Tests for exact Gaussian-rational phases and Laurent rational functions."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hallq.exact import (
    GaussianRational,
    LaurentPoly,
    PhaseDomainError,
    PoleError,
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    frac_parse,
    frac_str,
    phase_cmp,
    phase_eq,
    phase_le,
    phase_lt,
    rf_add,
    rf_eq,
    rf_eval,
    rf_inv,
    rf_mul,
    rf_neg,
)


def g(re, im):
    return GaussianRational(Fraction(re), Fraction(im))


def rf(num_low, num_coeffs, den_low=0, den_coeffs=(1,)):
    return RationalFunction(
        LaurentPoly(num_low, num_coeffs), LaurentPoly(den_low, den_coeffs)
    )


# t / (t^2 - 1)
RF_EX = rf(1, [1], 0, [-1, 0, 1])


# ----------------------------------------------------------------------
# Phase comparison
# ----------------------------------------------------------------------

def test_phase_lt_examples():
    assert phase_lt(g(2, 1), g(1, 2))
    assert phase_lt(g(1, 2), g(-2, 1))
    assert not phase_lt(g(-2, 1), g(1, 2))


def test_phase_irreflexive():
    z = g(3, 4)
    assert not phase_lt(z, z)
    assert phase_eq(z, z)


def test_phase_scaling_invariant():
    assert phase_eq(g(2, 1), g(4, 2))
    assert phase_le(g(2, 1), g(4, 2))


def test_phase_domain_errors():
    with pytest.raises(PhaseDomainError):
        phase_lt(g(0, 0), g(1, 1))
    with pytest.raises(PhaseDomainError):
        phase_lt(g(1, 1), g(-1, 0))
    with pytest.raises(PhaseDomainError):
        phase_cmp(g(1, -1), g(1, 1))


def test_phase_boundary_positive_real_axis():
    # re > 0, im == 0 is the minimum phase
    assert phase_lt(g(5, 0), g(1, 1))
    assert phase_eq(g(5, 0), g(7, 0))


rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=16
)

upper_half = st.builds(
    GaussianRational,
    st.fractions(min_value=-8, max_value=8, max_denominator=16),
    st.fractions(min_value=Fraction(1, 16), max_value=8, max_denominator=16),
)


@given(upper_half, upper_half)
def test_phase_trichotomy(z, w):
    outcomes = [phase_lt(z, w), phase_eq(z, w), phase_lt(w, z)]
    assert outcomes.count(True) == 1


@given(upper_half, upper_half, upper_half)
def test_phase_transitive(a, b, c):
    if phase_lt(a, b) and phase_lt(b, c):
        assert phase_lt(a, c)


@given(upper_half, upper_half)
def test_phase_cmp_antisymmetric(z, w):
    assert phase_cmp(z, w) == -phase_cmp(w, z)


# ----------------------------------------------------------------------
# Gaussian rational arithmetic
# ----------------------------------------------------------------------

def test_gaussian_ops():
    assert g(2, 1) + g(-2, 1) == g(0, 2)
    assert g(2, 1) - g(2, 1) == g(0, 0)
    assert -g(2, 1) == g(-2, -1)
    assert g(2, 1).scale(3) == g(6, 3)
    assert g(0, 0).is_zero
    assert not g(1, 0).is_zero


def test_gaussian_cross():
    assert g(2, 1).cross(g(1, 2)) == 3
    assert g(1, 2).cross(g(2, 4)) == 0


def test_gaussian_json_round_trip():
    z = GaussianRational(Fraction(-3, 2), Fraction(5, 7))
    assert GaussianRational.from_json(z.to_json()) == z
    assert z.to_json() == ["-3/2", "5/7"]


def test_frac_str_parse():
    assert frac_str(Fraction(3, 2)) == "3/2"
    assert frac_str(Fraction(4)) == "4"
    assert frac_parse("-3/2") == Fraction(-3, 2)
    assert frac_parse("7") == Fraction(7)


# ----------------------------------------------------------------------
# Laurent polynomials
# ----------------------------------------------------------------------

def test_laurent_normalizes_and_trims():
    p = LaurentPoly(0, [0, 2, 0, 0])
    assert p.t_low == 1
    assert p.coefficients == (Fraction(2),)
    assert LaurentPoly(3, [0, 0]).is_zero


def test_laurent_arithmetic():
    t = LaurentPoly.t_power(1)
    one = LaurentPoly.one()
    assert t * t == LaurentPoly.t_power(2)
    assert t + t == LaurentPoly(1, [2])
    assert t - t == LaurentPoly.zero()
    assert (t + one) * (t - one) == LaurentPoly(0, [-1, 0, 1])
    assert t ** 0 == one
    assert t.shifted(-3) == LaurentPoly.t_power(-2)


def test_laurent_q_power_doubles():
    assert LaurentPoly.q_power(2) == LaurentPoly.t_power(4)


def test_laurent_from_q_coeffs():
    # 1 + q becomes 1 + t^2
    p = LaurentPoly.from_q_coeffs([1, 1])
    assert p == LaurentPoly(0, [1, 0, 1])


def test_laurent_eval():
    p = LaurentPoly(-1, [1, 0, 1])  # t^-1 + t
    assert p.eval(2) == Fraction(5, 2)
    with pytest.raises(PoleError):
        p.eval(0)


def test_laurent_eval_even_at_q():
    p = LaurentPoly.q_power(1) + LaurentPoly.one()
    assert p.eval_even_at_q(3) == 4


def test_laurent_json_round_trip():
    p = LaurentPoly.from_fractions(-2, [Fraction(1, 2), Fraction(0), Fraction(-3)])
    assert LaurentPoly.from_json(p.to_json()) == p


# ----------------------------------------------------------------------
# Rational functions
# ----------------------------------------------------------------------

def test_rf_mul_cancels_to_one():
    # (t/(t^2-1)) * ((t^2-1)/t) == 1
    a = RF_EX
    b = rf(0, [-1, 0, 1], 1, [1])
    assert rf_mul(a, b) == RF_ONE


def test_rf_eq_common_factor():
    # 2t/(2t^2-2) == t/(t^2-1)
    a = rf(1, [2], 0, [-2, 0, 2])
    assert rf_eq(a, RF_EX)


def test_rf_eq_rejects_different():
    # t/(t^2-1) != 1/(t-1)
    b = rf(0, [1], 0, [-1, 1])
    assert not rf_eq(RF_EX, b)


def test_rf_eval():
    assert rf_eval(RF_EX, 2) == Fraction(2, 3)
    with pytest.raises(PoleError):
        rf_eval(RF_EX, 1)


def test_rf_inverse():
    a = RF_EX
    assert rf_mul(a, rf_inv(a)) == RF_ONE
    with pytest.raises(ZeroDivisionError):
        rf_inv(RF_ZERO)


def test_rf_canonical_form_is_unique():
    # equal values hash and compare equal after construction
    a = rf(1, [2], 0, [-2, 0, 2])
    assert a == RF_EX
    assert hash(a) == hash(RF_EX)


def test_rf_json_round_trip():
    a = rf(-1, [1, 2], 0, [3, 0, 1])
    assert RationalFunction.from_json(a.to_json()) == a


def test_rf_division_and_powers():
    a = RF_EX
    assert a / a == RF_ONE
    assert a ** 2 == rf_mul(a, a)
    assert a ** -1 == rf_inv(a)
    assert a ** 0 == RF_ONE


def test_rf_shifted():
    assert RationalFunction.t_power(2).shifted(3) == RationalFunction.t_power(5)


small_poly = st.builds(
    LaurentPoly,
    st.integers(min_value=-3, max_value=3),
    st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=4),
)

nonzero_poly = small_poly.filter(lambda p: not p.is_zero)

rationals_fn = st.builds(RationalFunction, small_poly, nonzero_poly)
nonzero_fn = st.builds(RationalFunction, nonzero_poly, nonzero_poly)


@given(rationals_fn, rationals_fn, rationals_fn)
def test_rf_field_axioms(a, b, c):
    assert rf_eq(rf_add(a, b), rf_add(b, a))
    assert rf_eq(rf_mul(a, b), rf_mul(b, a))
    assert rf_eq(rf_add(rf_add(a, b), c), rf_add(a, rf_add(b, c)))
    assert rf_eq(rf_mul(rf_mul(a, b), c), rf_mul(a, rf_mul(b, c)))
    assert rf_eq(rf_mul(a, rf_add(b, c)), rf_add(rf_mul(a, b), rf_mul(a, c)))
    assert rf_eq(rf_add(a, rf_neg(a)), RF_ZERO)
    assert rf_eq(rf_add(a, RF_ZERO), a)
    assert rf_eq(rf_mul(a, RF_ONE), a)


@given(nonzero_fn)
def test_rf_multiplicative_inverse(a):
    assert rf_eq(rf_mul(a, rf_inv(a)), RF_ONE)


def _random_rf(rng):
    num = LaurentPoly(
        rng.randint(-3, 3), [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
    )
    den = LaurentPoly.zero()
    while den.is_zero:
        den = LaurentPoly(
            rng.randint(-3, 3), [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
        )
    return RationalFunction(num, den)


def test_rf_eq_matches_pointwise_evaluation():
    # equality agrees with evaluation at three points away from all poles
    rng = random.Random(17)
    points = (Fraction(5, 3), Fraction(-7, 2), Fraction(11, 4))
    checked = 0
    while checked < 1000:
        a = _random_rf(rng)
        b = _random_rf(rng)
        try:
            vals_a = [rf_eval(a, x) for x in points]
            vals_b = [rf_eval(b, x) for x in points]
        except PoleError:
            continue
        if rf_eq(a, b):
            assert vals_a == vals_b
        else:
            assert vals_a != vals_b
        checked += 1
