"""
test_classical.py (10/2026)
Verify the two-point inequalities
"""
import pytest
import numpy as np
import hypothesis.strategies as st
from hypothesis import given, assume
from inequality_toolkit.classical import (ConjugateExponents, TwoPointCase,
    jensen_check, young_check, power_bracket_check, superadditivity_check)
from strategies import float_terms

def test_conjugate_exponents():
    pq = ConjugateExponents(3.0)
    assert pq.q == 1.5
    assert ConjugateExponents(2.0).q == 2.0
    for p in (1.0, 0.5, -2.0, np.inf):
        with pytest.raises(ValueError):
            ConjugateExponents(p)

def test_two_point_case_errors():
    with pytest.raises(ValueError):
        TwoPointCase(-1.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        TwoPointCase(1.0, np.nan, 2.0)
    with pytest.raises(ValueError):
        TwoPointCase(1.0, 1.0, 0.0)

@pytest.mark.parametrize("alpha, beta, p, lhs, rhs, equality", [
    (1.0, 1.0, 2.0, 4.0, 4.0, True),
    (1.0, 0.0, 2.0, 1.0, 2.0, False),
    (1.0, 0.0, 0.5, 2.0**-0.5, 1.0, False),
])
def test_jensen(alpha, beta, p, lhs, rhs, equality):
    report = jensen_check(TwoPointCase(alpha, beta, p))
    assert report.holds
    assert report.equality is equality
    np.testing.assert_allclose([report.numerator, report.denominator],
        [lhs, rhs], rtol=1e-15)
    assert report.extra['reverse'] is (p < 1)

@pytest.mark.parametrize("alpha, beta, p, lhs, rhs, equality", [
    (1.0, 1.0, 2.0, 1.0, 1.0, True),
    (2.0, 1.0, 2.0, 2.0, 2.5, False),
    (0.0, 3.0, 3.0, 0.0, 3.0**1.5/1.5, False),
])
def test_young(alpha, beta, p, lhs, rhs, equality):
    report = young_check(alpha, beta, ConjugateExponents(p))
    assert report.holds
    assert report.equality is equality
    np.testing.assert_allclose([report.numerator, report.denominator],
        [lhs, rhs], rtol=1e-14)

def test_power_bracket():
    report = power_bracket_check(2.0, 1.0, 2.0)
    assert (report.lower, report.ratio, report.bound) == (2.0, 3.0, 4.0)
    assert report.holds and not report.equality
    # degenerate interval
    report = power_bracket_check(1.5, 1.5, 3.0)
    assert (report.lower, report.ratio, report.bound) == (0.0, 0.0, 0.0)
    assert report.holds and report.equality
    # p = 1 collapses the bracket
    report = power_bracket_check(3.0, 0.0, 1.0)
    assert report.lower == report.bound == report.ratio == 3.0
    with pytest.raises(ValueError):
        power_bracket_check(1.0, 2.0, 2.0)
    with pytest.raises(ValueError):
        power_bracket_check(2.0, 1.0, 0.5)

def test_superadditivity():
    report = superadditivity_check(1.0, 1.0, 2.0)
    assert (report.numerator, report.denominator) == (2.0, 4.0)
    assert report.holds and not report.equality
    report = superadditivity_check(2.5, 0.0, 3.0)
    assert report.holds and report.equality
    with pytest.raises(ValueError):
        superadditivity_check(1.0, 1.0, 0.5)

# exponents away from the linear case p = 1
CURVED = st.sampled_from([0.5, 1.5, 2.0, 3.0])
CONJUGATE = st.sampled_from([1.5, 2.0, 3.0])

@st.composite
def argument_pairs(draw, forced=None):
    """
    Arguments in [0.1, 10] with beta = forced(alpha) when the equality case
    is drawn and a relative separation of at least 10% otherwise
    """
    alpha = draw(float_terms())
    if forced is not None and draw(st.booleans()):
        return alpha, forced(alpha), True
    beta = draw(float_terms())
    target = alpha if forced is None else forced(alpha)
    assume(abs(beta - target) >= 0.1*target)
    return alpha, beta, False

@given(st.data(), CURVED)
def test_jensen_equality_cases(data, p):
    alpha, beta, equal = data.draw(argument_pairs(lambda x: x))
    report = jensen_check(TwoPointCase(alpha, beta, p))
    assert report.holds
    assert report.equality is equal

@given(float_terms(0.0, 10.0), float_terms(0.0, 10.0))
def test_jensen_linear(alpha, beta):
    report = jensen_check(TwoPointCase(alpha, beta, 1.0))
    assert report.holds and report.equality

@given(st.data(), CONJUGATE)
def test_young_equality_cases(data, p):
    pq = ConjugateExponents(p)
    # equality exactly when alpha^p = beta^q
    alpha, beta, equal = data.draw(argument_pairs(lambda x: x**(p - 1.0)))
    report = young_check(alpha, beta, pq)
    assert report.holds
    assert report.equality is equal

@given(float_terms(), float_terms(), CONJUGATE, st.booleans())
def test_superadditivity_equality_cases(alpha, beta, p, vanish):
    # equality exactly when one argument vanishes
    beta = 0.0 if vanish else beta
    report = superadditivity_check(alpha, beta, p)
    assert report.holds
    assert report.equality is vanish
    assert superadditivity_check(alpha, beta, 1.0).equality

@given(float_terms(), float_terms(), CONJUGATE, st.booleans())
def test_power_bracket_equality_cases(alpha, beta, p, coincide):
    # both sides collapse exactly when alpha = beta
    big, small = max(alpha, beta), min(alpha, beta)
    small = big if coincide else small
    assume(coincide or (big - small >= 0.1))
    report = power_bracket_check(big, small, p)
    assert report.holds
    assert report.equality is coincide
    assert power_bracket_check(big, small, 1.0).equality
