import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mecard import groups
from mecard.arith import INF
from mecard.mahler import (
    certify_continuity,
    certify_values,
    extrapolate_space,
    extrapolate_values,
    lambda_shift_check,
    mahler_partial_sums,
    required_valuation,
)
from mecard.spaces import (
    EM,
    GEM,
    Classifying,
    Coproduct,
    CupFiber2,
    Point,
    Product,
    Pushout,
    chi_sequence,
)

BC3 = Classifying(groups.cyclic(3))

spaces = [
    EM((3,), 1),
    EM((3,), 2),
    EM((3,), 3),
    EM((9, 3), 2),
    GEM((((3,), 1), ((3,), 2))),
    GEM((((3,), 0), ((3,), 3))),
    BC3,
    Classifying(groups.heisenberg(3)),
    CupFiber2(2),
    CupFiber2(3),
    Product(BC3, EM((3,), 2)),
    Coproduct(EM((3,), 1), CupFiber2(2)),
    Pushout(Point(), Point(), BC3),
]


def test_required_valuation():
    assert required_valuation(7, 2) == 3
    assert required_valuation(7, 0) == 7
    assert required_valuation(7, 1, 2) == 5


@pytest.mark.parametrize("X", spaces, ids=repr)
def test_shift_identity_and_certificates(X):
    rep = lambda_shift_check(X, 3, 2, 12)
    assert rep.passed, rep.to_json()


def test_bc3_extrapolation_report():
    rep = extrapolate_space(BC3, 3, 2, 8)
    assert rep.passed
    assert rep.target == Fraction(1, 3)
    assert rep.partials[:5] == [1, -1, 3, -5, 11]
    assert rep.target_valuations == [n + 1 for n in range(9)]


def test_certificate_detects_discontinuity():
    cert = certify_values([Fraction(3) ** n for n in range(8)], 2, 1)
    assert cert.passed
    bad = certify_values([Fraction(2) ** n for n in range(8)], 2, 1)
    assert not bad.passed and bad.first_violation == 1


def test_non_dividing_l_warns():
    seq = chi_sequence(EM((3,), 1), 3)
    with pytest.warns(UserWarning):
        certify_continuity(seq, 3, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        certify_continuity(seq, 2, 4)


@pytest.mark.parametrize("l", [2, 3])
def test_p7_independent_of_l(l):
    X = Product(EM((7,), 2), Classifying(groups.cyclic(7)))
    rep = extrapolate_space(X, 7, l, 12)
    assert rep.passed
    assert rep.target == 1  # 7 * 1/7


@given(st.lists(st.fractions(max_denominator=10), min_size=1, max_size=10))
def test_partial_sums_agree_with_alternating_sum(xbar):
    sums = mahler_partial_sums(xbar)
    assert sums[-1] == sum((-1) ** k * c for k, c in enumerate(xbar))


def test_exact_target_gives_infinite_valuation():
    rep = extrapolate_values([Fraction(1)] * 4, 2, 1, 1)
    assert rep.target_valuations == [INF] * 4 and rep.passed
