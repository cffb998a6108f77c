from fractions import Fraction

from hypothesis import given, strategies as st

from affine_hecke.serialize import format_coeff, format_series, parse_series
from affine_hecke.series import GradedSeries

keys = st.tuples(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-3, 6))
coeffs = st.fractions(max_denominator=7).filter(lambda c: c != 0)


def test_coefficient_format():
    assert format_coeff(Fraction(4, 2)) == "2"
    assert format_coeff(Fraction(-3, 6)) == "-1/2"


def test_canonical_order():
    s = GradedSeries(1, 1, 3, {((1,), 1): 1, ((-1,), 1): 1, ((0,), 0): Fraction(1, 2)})
    assert format_series(s) == "level 1 | 1/2 v^0 x^[0] + 1 v^1 x^[-1] + 1 v^1 x^[1] (certified to v^3)"
    assert format_series(GradedSeries(0, 1, 2)) == "level 0 | 0 (certified to v^2)"


@given(st.dictionaries(keys, coeffs, max_size=8), st.integers(1, 3))
def test_roundtrip(terms, k):
    s = GradedSeries(k, 2, 7, terms)
    text = format_series(s)
    assert parse_series(text, 2) == s
    assert format_series(parse_series(text, 2)) == text
