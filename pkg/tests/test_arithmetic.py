from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cwsurgery.arithmetic import (
    DegenerateFraction,
    format_rational,
    gcd_pair,
    make_rational,
    parse_rational,
    squarefree_decompose,
)

from oracles import largest_square_root_divisor, squarefree_by_trial


@pytest.mark.parametrize("num, den, expected", [
    (6, 4, Fraction(3, 2)),
    (3, -6, Fraction(-1, 2)),
    (0, 7, Fraction(0, 1)),
])
def test_make_rational(num, den, expected):
    x = make_rational(num, den)
    assert x == expected
    assert x.denominator >= 1
    assert (x.numerator, x.denominator) == (expected.numerator, expected.denominator)


def test_zero_denominator():
    with pytest.raises(DegenerateFraction, match="degenerate fraction"):
        make_rational(1, 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool),
       st.integers(-50, 50).filter(bool))
def test_make_rational_scale_invariant(a, b, k):
    assert make_rational(a, b) == make_rational(k * a, k * b)


@pytest.mark.parametrize("p, expected", [(1, (1, 1)), (12, (2, 3)), (63, (3, 7))])
def test_squarefree_examples(p, expected):
    assert tuple(squarefree_decompose(p)) == expected


@pytest.mark.parametrize("bad", [0, -4])
def test_squarefree_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        squarefree_decompose(bad)


def test_squarefree_against_trial_division():
    for p in range(1, 3001):
        d, pp = squarefree_decompose(p)
        assert d * d * pp == p
        assert squarefree_by_trial(pp)
        assert d == largest_square_root_divisor(p)


@pytest.mark.parametrize("a, b, g", [(6, 4, 2), (0, 5, 5), (9, 63, 9), (0, 0, 0)])
def test_gcd_examples(a, b, g):
    assert gcd_pair(a, b) == g


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_gcd_properties(a, b, c):
    g = gcd_pair(a, b)
    assert g == gcd_pair(b, a)
    assert gcd_pair(gcd_pair(a, b), c) == gcd_pair(a, gcd_pair(b, c))
    if g:
        assert a % g == 0 and b % g == 0


@pytest.mark.parametrize("text, value", [
    ("-23/90", Fraction(-23, 90)), ("7", Fraction(7)), ("4/-6", Fraction(-2, 3)), (5, Fraction(5)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_parse_rejects_float_and_garbage():
    with pytest.raises(TypeError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational("1/2/3")


@given(st.fractions())
def test_format_roundtrip(x):
    s = format_rational(x)
    assert "/" in s
    assert parse_rational(s) == x
