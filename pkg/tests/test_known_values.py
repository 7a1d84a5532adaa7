"""Small worked values across modules, frozen."""

from fractions import Fraction

from mecard import groups
from mecard.arith import INF, binomial, binomial_transform, inverse_binomial_transform, l_valuation, qbinomial
from mecard.expoly import ExpoPoly, IntValuedPoly
from mecard.mahler import certify_values, extrapolate_values
from mecard.resolutions import resolution_convergence, bar_sequence, iterated_bar_sequence, SimplicialCardinalitySeq
from mecard.series import (
    TruncatedSeries,
    chi_symmetric_genfun,
    subgroup_count_zpn,
    sym_cardinality_product,
    sym_cardinality_series,
)
from mecard.spaces import (
    EM,
    Classifying,
    CupFiber2,
    Point,
    Product,
    Pushout,
    chi,
    chi_sequence,
    cup_fiber_chi,
    homotopy_cardinality,
    ofun,
    s_count_brute,
    skew_rank_count,
    validate_p_small,
)


def test_arith_values():
    assert binomial(-1, 3) == -1 and binomial(5, 2) == 10 and binomial(4, 7) == 0
    for p in (3, 5, 7):
        assert qbinomial(-1, 1, p) == Fraction(-1, p)
        assert qbinomial(-2, 0, p) == 1
    assert qbinomial(3, 2, 3) == 13
    assert l_valuation(24, 2) == 3 and l_valuation(Fraction(1, 9), 3) == -2 and l_valuation(0, 5) == INF
    assert inverse_binomial_transform([7] * 5) == [7, 0, 0, 0, 0]
    assert inverse_binomial_transform([9**n for n in range(6)]) == [8**n for n in range(6)]
    assert binomial_transform([4, 0, 0, 0]) == [4] * 4
    assert binomial_transform([2**n for n in range(6)]) == [3**n for n in range(6)]


def test_expoly_values():
    assert IntValuedPoly.basis(2)(4) == 6
    for d in range(5):
        assert IntValuedPoly.basis(d)(-1) == (-1) ** d
    # C(x-1, 0) at n = 1
    assert IntValuedPoly.basis(0).shift(-1)(1) == 1
    d4 = ExpoPoly(2, ((Fraction(3, 2), IntValuedPoly.basis(1, 2)), (Fraction(-1, 2), IntValuedPoly.basis(1))))
    assert d4(1) == 5 and d4(2) == 22 and d4(-1) == Fraction(1, 8)
    em = ExpoPoly.power(3, IntValuedPoly.basis(2))
    assert em(3) == 27 and em(-1) == 3
    zero_exp = ExpoPoly.power(3, IntValuedPoly.basis(1) * IntValuedPoly())
    assert zero_exp(-1) == 1
    lin = ExpoPoly.power(5, IntValuedPoly.basis(1))
    assert lin * lin == ExpoPoly.power(5, IntValuedPoly.basis(1, 2))
    assert d4 + d4.scale(-1) == ExpoPoly(2)


def test_group_values():
    C8, S4 = groups.cyclic(8), groups.symmetric(4)
    assert C8.is_abelian and C8.order == 8 and S4.order == 24
    Q8 = groups.quaternion()
    assert not Q8.is_abelian and Q8.element_orders.count(2) == 1
    assert len(groups.p_power_order_elements(S4, 3)) == 9
    assert len(groups.p_power_order_elements(C8, 2)) == 8
    assert groups.p_power_order_elements(C8, 3) == [C8.identity]
    assert groups.chi_bg(groups.dihedral(4), 2, 1) == 5
    assert groups.chi_bg(S4, 2, 0) == 1
    assert groups.chi_bg(Q8, 2, 2) == 22
    assert len(groups.abelian_subgroups(groups.cyclic(5))) == 2
    assert groups.brute_force_commuting_tuples(groups.parse_group("C3xC3"), 3, 2) == 81
    assert groups.brute_force_commuting_tuples(S4, 3, 0) == 1


def test_moebius_values():
    c5 = groups.moebius_coefficients(groups.cyclic(5))
    assert sorted(c5.values()) == [0, 1]
    assert {A.order: c for A, c in c5.items()} == {1: 0, 5: 1}
    d4 = groups.moebius_coefficients(groups.dihedral(4))
    nonzero = sorted((A.order, c) for A, c in d4.items() if c)
    assert nonzero == [(2, -2), (4, 1), (4, 1), (4, 1)]
    center = next(A for A, c in d4.items() if c == -2)
    assert center.mask & groups.dihedral(4).centralizer(center.mask) == center.mask
    trivial = groups.moebius_coefficients(groups.cyclic(1))
    assert list(trivial.values()) == [1]


def test_hkr_values():
    for n in range(5):
        assert groups.hkr_chi(groups.cyclic(3), 3)(n) == 3**n
        assert groups.hkr_chi(groups.cyclic(8), 2)(n) == 8**n
    assert groups.p_typical_cardinality(groups.symmetric(4), 3) == Fraction(2, 3)
    assert groups.p_typical_cardinality(groups.cyclic(6), 3) == Fraction(1, 3)
    for G, p in ((groups.heisenberg(3), 3), (groups.dihedral(4), 2), (groups.cyclic(9), 3)):
        assert groups.p_typical_cardinality(G, p) == Fraction(1, G.order)


def test_space_values():
    assert chi(Pushout(Point(), Point(), Classifying(groups.cyclic(3))), 0, 3) == 1
    assert cup_fiber_chi(2, 3, 1) == 1 and cup_fiber_chi(2, 3, 3) == 29
    assert homotopy_cardinality(CupFiber2(2), 5) == 1
    assert homotopy_cardinality(EM((5,), 2), 5) == 5
    assert homotopy_cardinality(Classifying(groups.dihedral(4)), 2) == Fraction(1, 8)
    for n in range(1, 5):
        assert skew_rank_count(n, 0, 3) == 1
    for n in range(1, 4):
        assert s_count_brute(2, 2, n, 3) == 3 ** (n * (n - 1) // 2)
    assert s_count_brute(2, 1, 4, 3) == 1
    assert ofun({1: 3, 2: 5, 3: 7}, 0) == Fraction(1, 3) * 5 / 7
    assert ofun({2: 3}, 2) == Fraction(1, 3)


def test_validation_values():
    rep = validate_p_small(Product(EM((3,), 1), EM((5,), 1)), 3)
    assert not rep.accepted and any("5" in w for w in rep.witnesses)
    assert validate_p_small(EM((9,), 2), 3).accepted
    rep = validate_p_small(Classifying(groups.symmetric(4)), 3)
    assert rep.accepted and rep.flags


def test_mahler_values():
    bc3 = chi_sequence(Classifying(groups.cyclic(3)), 3)
    cert = certify_values(bc3.values(9), 2, 1)
    assert cert.passed and cert.coefficients == [2**n for n in range(9)]
    assert [v for _, v in cert.valuations] == list(range(9))
    em = chi_sequence(EM((3,), 2), 3)
    assert certify_values(em.values(9), 2, 2).passed
    flat = certify_values([Fraction(4)] * 6, 7, 0)
    assert flat.passed and flat.coefficients[1:] == [0] * 5
    zero = extrapolate_values([Fraction(0)] * 5, 2, 1, 0)
    assert zero.partials == [0] * 5 and zero.passed


def test_series_values():
    M = 8
    ones = TruncatedSeries.from_terms({0: 1, 1: -1}, M).reciprocal()
    assert list(ones.coeffs) == [1] * (M + 1)
    assert sym_cardinality_series(3, 6)[4] == Fraction(2, 3)
    s = TruncatedSeries((1, 2, 3, 4))
    assert s * s.reciprocal() == TruncatedSeries.one(3)
    gf = chi_symmetric_genfun(3, 1, 4)
    assert gf[3] == 2 and gf[4] == 2
    for p in (2, 3, 5):
        assert list(chi_symmetric_genfun(p, 0, 6).coeffs) == [1] * 7
    assert sym_cardinality_series(3, 4)[3] == Fraction(2, 3)
    assert sym_cardinality_product(3, 4) == Fraction(2, 3)
    assert sym_cardinality_product(3, 6) == Fraction(5, 9)
    assert sym_cardinality_product(7, 6) == 1
    assert sym_cardinality_series(7, 6).coeffs == (1,) * 7
    assert subgroup_count_zpn(5, 3, 0) == 1
    assert subgroup_count_zpn(3, 2, 1) == 4
    assert subgroup_count_zpn(7, 1, 5) == 1


def test_resolution_values():
    seq = bar_sequence(3)
    assert seq.values(3) == [1, 3, 9] and seq.target == Fraction(1, 3)
    rep = resolution_convergence(seq, 2, 2)
    assert rep.valuations == [1, 2, 3]
    assert resolution_convergence(iterated_bar_sequence(3, 2), 2, 8).passed
    point = SimplicialCardinalitySeq(lambda n: 1, "point", Fraction(1))
    assert resolution_convergence(point, 2, 6).valuations == [INF] * 7
