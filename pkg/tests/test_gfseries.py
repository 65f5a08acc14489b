from fractions import Fraction
from math import comb, factorial

import pytest

from dumont.gfseries import (BlockSystemSolution, RationalSeries, SequenceId,
                             TruncatedSeries, a_elizalde, b7482, b_elizalde,
                             catalan_number, catalan_series, catalan_trunc,
                             central_binomial_series, closed_form,
                             d4_1423_series, genocchi, gf_identities_check,
                             little_schroder, signed_genocchi_egf,
                             solve_prst_system, validity_range)

A343795 = [1, 1, 3, 10, 39, 174, 872, 4805, 28474, 178099, 1160173, 7803860]


def geometric(order):
    return TruncatedSeries([1] * (order + 1))


def test_series_arith_geometric_identity():
    order = 16
    one_minus_z = TruncatedSeries([1, -1], order)
    assert one_minus_z * geometric(order) == TruncatedSeries.one(order)
    assert TruncatedSeries.one(order) / one_minus_z == geometric(order)


def test_series_functional_equations():
    order = 20
    c = catalan_series(order)
    b = central_binomial_series(order)
    one = TruncatedSeries.one(order)
    assert c == one + (c * c).shift(1)
    assert b == one + (b * c).shift(1).scale(2)


def test_series_division_errors():
    with pytest.raises(ValueError, match="zero constant term"):
        TruncatedSeries.one(4) / TruncatedSeries([0, 1], 4)
    with pytest.raises(ValueError, match="inexact"):
        TruncatedSeries([1], 4) / TruncatedSeries([2, 1], 4)


def test_series_truncates_to_smaller_order():
    a = TruncatedSeries([1, 2, 3], 8)
    b = TruncatedSeries([1, 1], 3)
    assert (a + b).order == 3
    assert (a * b).order == 3


def test_catalan_trunc_values():
    # C_{e,0} = 1, C_{o,1} = z, C_{e,4} = 1 + 2z^2 + 14z^4; zero below m = 0.
    assert catalan_trunc("even", 0, 6) == TruncatedSeries([1], 6)
    assert catalan_trunc("odd", 0, 6) == TruncatedSeries([0, 1], 6)
    assert catalan_trunc("even", 2, 6) == TruncatedSeries([1, 0, 2, 0, 14, 0, 0])
    assert catalan_trunc("even", -1, 6) == TruncatedSeries.zero(6)
    assert catalan_trunc("odd", -1, 6) == TruncatedSeries.zero(6)
    with pytest.raises(ValueError):
        catalan_trunc("sideways", 2, 6)


def test_d4_1423_series_reference_prefix():
    assert list(d4_1423_series(11).coeffs) == A343795
    assert d4_1423_series(0).coeffs == (1,)


def test_d4_1423_series_depth_stability():
    base = d4_1423_series(9)
    from dumont.gfseries import _cf_depth
    for extra in (1, 2):
        assert d4_1423_series(9, depth=_cf_depth(9) + extra) == base


def test_prst_system_matches_continued_fraction():
    sol = solve_prst_system(24)
    assert isinstance(sol, BlockSystemSolution)
    assert sol.series() == d4_1423_series(24)


def test_prst_constant_terms():
    sol = solve_prst_system(6)
    for idx, series in sol.p.items():
        assert series.coefficient(0) == 1, f"P_{idx}"
    for idx, series in sol.s.items():
        assert series.coefficient(0) == 0, f"S_{idx}"
    for idx, series in sol.t.items():
        assert series.coefficient(0) == 1, f"T_{idx}"


def test_genocchi_values():
    assert [genocchi(n) for n in range(1, 6)] == [1, 1, 3, 17, 155]
    assert genocchi(6) == 2073
    with pytest.raises(ValueError):
        genocchi(0)


def test_genocchi_positive_integers_through_12():
    for n in range(1, 13):
        assert genocchi(n) > 0


def test_signed_genocchi_egf_identity():
    # sum (-1)^n G(2n) x^(2n)/(2n)! agrees with -x*tanh(x/2).
    order = 12
    rhs = signed_genocchi_egf(order)
    for n in range(1, order // 2 + 1):
        lhs = Fraction((-1) ** n * genocchi(n), factorial(2 * n))
        assert rhs.coefficient(2 * n) == lhs
        assert rhs.coefficient(2 * n - 1) == 0


def test_bernoulli_consistency():
    # Solving G(2n) = 2(1 - 2^(2n)) (-1)^n B(2n) for B must reproduce the
    # Bernoulli numbers taken from the independent EGF x/(e^x - 1).
    order = 16
    expm1_over_x = RationalSeries(
        [Fraction(1, factorial(k + 1)) for k in range(order + 1)])
    bern = RationalSeries([1] + [0] * order) / expm1_over_x
    for n in range(1, 7):
        from_genocchi = Fraction(genocchi(n) * (-1) ** n, 2 * (1 - 2 ** (2 * n)))
        assert bern.coefficient(2 * n) * factorial(2 * n) == from_genocchi


def test_little_schroder_prefix():
    assert [little_schroder(n) for n in range(1, 8)] == [1, 1, 3, 11, 45, 197, 903]


def test_b7482_prefix():
    assert [b7482(n) for n in range(7)] == [1, 1, 3, 11, 39, 139, 495]


def test_elizalde_sequences():
    assert [a_elizalde(n) for n in range(8)] == [1, 1, 1, 2, 3, 7, 12, 30]
    assert b_elizalde(4) == 1
    assert b_elizalde(5) == 2
    assert b_elizalde(2) == 0


def test_d1_2143_table_golden():
    got = [closed_form(SequenceId.D1_2143_TABLE, n) for n in range(11)]
    assert got == [1, 1, 2, 7, 36, 239, 1892, 17015, 168503, 1799272, 20409644]


def test_closed_form_validity_errors():
    with pytest.raises(ValueError, match="d1_213"):
        closed_form(SequenceId.D1_213, 0)
    with pytest.raises(ValueError, match="0 <= n <= 10"):
        closed_form(SequenceId.D1_2143_TABLE, 11)
    lo, hi = validity_range(SequenceId.D4_321_1)
    assert (lo, hi) == (1, None)


def test_single_occurrence_identity_to_30():
    for n in range(1, 31):
        assert closed_form(SequenceId.D4_321_1, n) == (
            closed_form(SequenceId.NOONAN, n) + closed_form(SequenceId.NOONAN, n + 1))
        assert closed_form(SequenceId.NOONAN, n) == closed_form(SequenceId.ZEILBERGER, n)


def test_closed_form_small_values():
    assert [closed_form(SequenceId.D4_1324, n) for n in range(7)] == \
        [1, 1, 3, 7, 13, 21, 31]
    assert [closed_form(SequenceId.D4_1234, n) for n in range(7)] == \
        [1, 1, 2, 4, 0, 0, 0]
    assert closed_form(SequenceId.D2_2143, 4) == a_elizalde(4) * a_elizalde(5)
    assert closed_form(SequenceId.D1_321_1, 5) == 16
    assert closed_form(SequenceId.A343795_D4_312, 11) == 7803860


def test_bc_coefficients_match_binomials():
    order = 12
    c = catalan_series(order)
    b = central_binomial_series(order)
    bc3 = b * c.pow(3)
    assert bc3.coefficient(2) == comb(2 * 2 + 3, 2) == 21
    for k in range(1, 7):
        ck = c.pow(k)
        for n in range(order + 1):
            assert ck.coefficient(n) * (n + k) == k * comb(2 * n + k - 1, n) * (n + k) // (n + k)
            assert Fraction(k, n + k) * comb(2 * n + k - 1, n) == ck.coefficient(n)


def test_gf_identities_check_all_pass():
    checks = gf_identities_check(14)
    assert checks, "expected a nonempty fragment"
    failed = [c.name for c in checks if not c.ok]
    assert not failed, failed


def test_gf_identities_check_requires_order_8():
    with pytest.raises(ValueError):
        gf_identities_check(7)


def test_catalan_number_sanity():
    assert [catalan_number(n) for n in range(9)] == \
        [1, 1, 2, 5, 14, 42, 132, 429, 1430]
