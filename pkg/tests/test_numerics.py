from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from pbernoulli.numerics import (
    as_rational,
    binomial,
    factorial,
    harmonic,
    parse_rational,
    rational,
    render_rational,
)


def test_rational_is_reduced_with_positive_denominator():
    assert rational(2, 4) == Fraction(1, 2)
    value = rational(1, -3)
    assert (value.numerator, value.denominator) == (-1, 3)
    assert rational(0, 5).denominator == 1


def test_rational_rejects_inexact_input():
    with pytest.raises(TypeError):
        rational(1.5)
    with pytest.raises(TypeError):
        rational(1, True)
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)
    with pytest.raises(TypeError):
        as_rational(0.5)


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(-1, 3), "-1/3"), (Fraction(0), "0"), (Fraction(7), "7"), (Fraction(1, 12), "1/12")],
)
def test_render_rational(value, text):
    assert render_rational(value) == text
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/-3", "one", "1/2/3", ""])
def test_parse_rational_rejects_non_canonical_text(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(st.fractions())
def test_rendering_reparses_to_the_same_rational(value):
    assert parse_rational(render_rational(value)) == value


def test_factorial_and_binomial_boundaries():
    assert factorial(0) == 1
    assert factorial(25) == 15511210043330985984000000
    with pytest.raises(ValueError):
        factorial(-1)
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(0, 0) == 1
    assert binomial(60, 30) == 118264581564861424


@given(st.integers(min_value=1, max_value=200), st.integers(min_value=-2, max_value=202))
def test_binomial_satisfies_pascal(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(min_value=1, max_value=300))
def test_factorial_recurrence(n):
    assert factorial(n) == n * factorial(n - 1)


def test_harmonic_small_values():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(-1)


@given(st.integers(min_value=0, max_value=120))
def test_harmonic_matches_sympy(n):
    expected = sympy.harmonic(n)
    assert harmonic(n) == Fraction(int(expected.p), int(expected.q))
