from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mecard.arith import binomial
from mecard.expoly import ZERO_POLY, ExpoPoly, IntValuedPoly

polys = st.lists(st.integers(-5, 5), max_size=4).map(lambda c: IntValuedPoly(tuple(c)))
coefs = st.fractions(max_denominator=20).filter(lambda x: abs(x) < 100)
expolys = st.lists(st.tuples(coefs, polys), max_size=3).map(lambda t: ExpoPoly(3, tuple(t)))


def test_basis_and_degree():
    f = IntValuedPoly.basis(2, 3)
    assert f.degree == 2
    assert [f(n) for n in range(5)] == [0, 0, 3, 9, 18]
    assert f(-1) == 3
    assert ZERO_POLY.degree == -1
    assert IntValuedPoly((1, 2, 0, 0)).coeffs == (1, 2)


def test_from_values_triangular():
    assert IntValuedPoly.from_values([0, 1, 3]).coeffs == (0, 1, 1)


def test_from_values_half_integer():
    with pytest.raises(ValueError):
        IntValuedPoly.from_values([0, Fraction(1, 2)])


@given(polys, polys, st.integers(-6, 6))
def test_ring_operations_pointwise(f, g, n):
    assert (f + g)(n) == f(n) + g(n)
    assert (f - g)(n) == f(n) - g(n)
    assert (f * g)(n) == f(n) * g(n)
    assert f.shift(2)(n) == f(n + 2)


@given(polys, st.integers(0, 8))
def test_partial_sums(f, n):
    assert f.partial_sums()(n) == sum(f(k) for k in range(n))


def test_expoly_canonical_form():
    a = ExpoPoly(2, ((Fraction(1), IntValuedPoly((1, 1))),))
    b = ExpoPoly(2, ((Fraction(2), IntValuedPoly((0, 1))),))
    assert a == b
    assert ExpoPoly(2, ((1, ZERO_POLY), (-1, ZERO_POLY))) == ExpoPoly(2)
    assert not ExpoPoly(2)


def test_d4_hkr_shape():
    e = ExpoPoly(2, ((Fraction(3, 2), IntValuedPoly.basis(1, 2)), (Fraction(-1, 2), IntValuedPoly.basis(1))))
    assert e.values(5) == [1, 5, 22, 92, 376]
    assert e.extrapolate_minus_one() == Fraction(1, 8)
    assert e.max_degree == 1


@given(expolys, expolys, st.integers(-3, 6))
def test_expoly_arithmetic_pointwise(e, f, n):
    assert (e + f)(n) == e(n) + f(n)
    assert (e - f)(n) == e(n) - f(n)
    assert (e * f)(n) == e(n) * f(n)
    assert (e + 2)(n) == e(n) + 2


@given(expolys)
def test_json_round_trip(e):
    assert ExpoPoly.from_json(e.to_json()) == e


def test_mismatched_primes():
    with pytest.raises(ValueError):
        ExpoPoly.constant(2, 1) + ExpoPoly.constant(3, 1)


def test_power_of_binomial_matches_em():
    e = ExpoPoly.power(5, IntValuedPoly.basis(2))
    assert [e(n) for n in range(6)] == [5 ** binomial(n, 2) for n in range(6)]
    assert e(-1) == 5
