from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mecard import groups
from mecard.series import (
    TruncatedSeries,
    chi_symmetric_genfun,
    rows_csv,
    subgroup_count_zpn,
    sym_cardinality_product,
    sym_cardinality_series,
)

CARD_3 = [1, 1, 1, Fraction(2, 3), Fraction(2, 3), Fraction(2, 3), Fraction(5, 9)]

series = st.lists(st.fractions(max_denominator=9), min_size=6, max_size=6).map(
    lambda c: TruncatedSeries((Fraction(1),) + tuple(c[1:]))
)


def test_cardinality_series_values():
    s = sym_cardinality_series(3, 12)
    assert list(s.coeffs[:7]) == CARD_3
    assert s[12] == Fraction(110, 243)
    for m in range(13):
        assert s[m] == sym_cardinality_product(3, m)


def test_genfun_at_minus_one_is_cardinality_series():
    assert chi_symmetric_genfun(3, -1, 12) == sym_cardinality_series(3, 12)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_genfun_matches_group_counts(n):
    gf = chi_symmetric_genfun(3, n, 5)
    for m in range(1, 6):
        assert gf[m] == groups.chi_bg(groups.symmetric(m), 3, n)


def test_genfun_n0_counts_partitions():
    # chi_0 counts components: one for each m
    assert list(chi_symmetric_genfun(2, 0, 8).coeffs) == [1] * 9


def test_subgroup_counts():
    assert subgroup_count_zpn(3, 1, 4) == 1
    assert subgroup_count_zpn(2, 2, 1) == 3
    assert subgroup_count_zpn(3, 2, 2) == 13


@given(series, series)
def test_series_ring(a, b):
    assert (a * b) * b.reciprocal() == a
    assert a * TruncatedSeries.one(5) == a


small_exponents = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(series, small_exponents, small_exponents)
@settings(max_examples=40, deadline=None)
def test_power_laws(a, e, f):
    assert (a**e) * (a**f) == a ** (e + f)


def test_integer_power_is_repeated_product():
    a = TruncatedSeries((1, 2, 0, 1, 0))
    assert a**3 == a * a * a
    assert a ** -1 == a.reciprocal()


def test_csv():
    assert rows_csv([(0, Fraction(1)), (1, Fraction(2, 3))]) == "m,coefficient\n0,1/1\n1,2/3"
