from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperhopf.polynomial import (
    RationalPolynomial,
    falling_factorial,
    format_hilbert,
    from_hilbert_basis,
    hilbert_polynomial,
    to_hilbert_basis,
)

coeffs = st.lists(st.fractions(max_denominator=12).filter(lambda f: abs(f) < 50), max_size=6)


def test_text_rendering():
    p = RationalPolynomial([0, Fraction(1, 2), Fraction(-3, 2), 1])
    assert str(p) == "X^3 - 3/2 X^2 + 1/2 X"
    assert str(RationalPolynomial()) == "0"
    assert str(RationalPolynomial([-1])) == "-1"
    assert str(RationalPolynomial([0, -1, 0, 0, 1])) == "X^4 - X"


def test_hilbert_polynomials_are_binomials():
    for k in range(6):
        for n in range(8):
            assert hilbert_polynomial(k)(n) == comb(n, k)


def test_falling_factorial_roots():
    p = falling_factorial(4)
    assert [p(i) for i in range(4)] == [0, 0, 0, 0]
    assert p(5) == 120


@given(coeffs)
def test_hilbert_round_trip(cs):
    p = RationalPolynomial(cs)
    assert from_hilbert_basis(to_hilbert_basis(p)) == p


@given(coeffs, coeffs, st.integers(-5, 5))
def test_ring_operations_agree_with_evaluation(a, b, x):
    p, q = RationalPolynomial(a), RationalPolynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert p.compose_neg()(x) == p(-x)


def test_format_hilbert():
    assert format_hilbert([0, 0, 5, 70, 180, 120]) == "5 H2 + 70 H3 + 180 H4 + 120 H5"


def test_hilbert_index_must_be_nonnegative():
    with pytest.raises(ValueError):
        hilbert_polynomial(-1)
