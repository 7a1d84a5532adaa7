import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mecard.arith import (
    INF,
    binomial,
    binomial_transform,
    format_rational,
    inverse_binomial_transform,
    is_prime,
    l_valuation,
    log_p,
    parse_rational,
    prime_power_log,
    qbinomial,
)

rationals = st.fractions(max_denominator=1000).filter(lambda x: abs(x) < 10**6)
primes = st.sampled_from([2, 3, 5, 7, 11])


def test_binomial_small():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(-1, 4) == 1
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    with pytest.raises(ValueError):
        binomial(3, -1)


@given(st.integers(-40, 40), st.integers(0, 12))
def test_binomial_pascal(n, k):
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


def test_qbinomial_values():
    assert qbinomial(4, 2, 2) == 35
    assert qbinomial(3, 1, 3) == 13
    assert qbinomial(5, 0, 7) == 1
    assert qbinomial(2, 3, 3) == 0
    # negative upper argument
    assert qbinomial(-1, 1, 3) == Fraction(-1, 3)
    with pytest.raises(ZeroDivisionError):
        qbinomial(3, 2, 1)


@given(st.integers(-6, 8), st.integers(1, 5), st.sampled_from([2, 3, 5]))
def test_qbinomial_q_pascal(a, b, q):
    lhs = qbinomial(a + 1, b, q)
    rhs = qbinomial(a, b - 1, q) + Fraction(q) ** b * qbinomial(a, b, q)
    assert lhs == rhs


@given(st.integers(0, 8), st.integers(0, 8))
def test_qbinomial_symmetry_and_integrality(n, k):
    # [n, k]_2 counts k-dim subspaces of F_2^n; symmetric in k <-> n-k
    if k <= n:
        assert qbinomial(n, k, 2) == qbinomial(n, n - k, 2)
        assert qbinomial(n, k, 2).denominator == 1


def test_valuation():
    assert l_valuation(0, 3) == INF
    assert l_valuation(Fraction(18, 5), 3) == 2
    assert l_valuation(Fraction(5, 24), 2) == -3
    assert l_valuation(-7, 7) == 1


@given(rationals, rationals, primes)
def test_valuation_multiplicative(x, y, l):
    if x and y:
        assert l_valuation(x * y, l) == l_valuation(x, l) + l_valuation(y, l)


@given(rationals, rationals, primes)
def test_valuation_ultrametric(x, y, l):
    assert l_valuation(x + y, l) >= min(l_valuation(x, l), l_valuation(y, l))


@given(st.lists(rationals, min_size=1, max_size=14))
@settings(max_examples=300)
def test_transform_round_trip(xs):
    assert binomial_transform(inverse_binomial_transform(xs)) == xs
    assert inverse_binomial_transform(binomial_transform(xs)) == xs


@given(st.lists(st.integers(-100, 100), min_size=1, max_size=7))
@settings(max_examples=300)
def test_polynomial_mahler_vanishing(coeffs):
    deg = len(coeffs) - 1
    vals = [sum(c * n**i for i, c in enumerate(coeffs)) for n in range(deg + 6)]
    xbar = inverse_binomial_transform(vals)
    assert all(c == 0 for c in xbar[deg + 1 :])
    assert all(c.denominator == 1 for c in xbar)


def test_inverse_transform_of_geometric():
    # g^n has Mahler coefficients (g-1)^n
    assert inverse_binomial_transform([3**n for n in range(6)]) == [2**n for n in range(6)]


def test_primes_and_logs():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power_log(27) == (3, 3)
    assert prime_power_log(12) is None
    assert prime_power_log(1) is None
    assert log_p(125, 5) == 3
    with pytest.raises(ValueError):
        log_p(12, 2)


@given(rationals)
def test_rational_format_round_trip(x):
    assert parse_rational(format_rational(x)) == x
    assert "/" in format_rational(x)


def test_comb_agrees_with_math():
    for n in range(12):
        for k in range(12):
            assert binomial(n, k) == math.comb(n, k)
