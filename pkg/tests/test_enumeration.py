from fractions import Fraction

import pytest

from partavoid.avoidance import avoids, count_avoiders
from partavoid.core import SetPartition, iter_partitions
from partavoid.enumeration import (
    BivariateSeries,
    ComposeNonzeroConstant,
    DivByZeroConstant,
    InexactDivision,
    NonIntegralCoefficient,
    PowerSeries,
    SqrtNonUnit,
    core_gf_14_23,
    count_1_234,
    count_12_3_4,
    count_12_34,
    count_134_2,
    count_beta_k,
    count_sigma_k,
    egf_crosscheck_beta_k,
    egf_crosscheck_sigma_k,
    geometric,
    gf_coeffs_13_24,
    gf_coeffs_14_2_3,
    gf_coeffs_14_23,
    gf_coeffs_1_24_3,
    gf_coeffs_rational,
    h_series_check,
    _poly_div_one_minus_t,
)
from partavoid.bijections import generate_14_23_core

P = SetPartition.parse


# =========================================================================
# series plumbing
# =========================================================================

def test_series_identities():
    N = 12
    g = geometric(N)
    one = PowerSeries([1], N)
    z = PowerSeries([0, 1], N)
    assert (g * (one - z)).coeffs == one.coeffs
    assert (one / (one - z)).coeffs == g.coeffs
    assert ((one - z) + z).coeffs == one.coeffs


def test_series_sqrt():
    N = 8
    f = PowerSeries([1, -4], N).sqrt()
    # (sqrt f)^2 == f
    assert list((f * f).coeffs) == list(PowerSeries([1, -4], N).coeffs)
    # central binomials hide in 1/sqrt(1-4z)
    inv = PowerSeries([1], N) / f
    assert list(inv.coeffs[:5]) == [1, 2, 6, 20, 70]


def test_series_compose():
    N = 10
    f = geometric(N)
    z = PowerSeries([0, 1], N)
    assert f.compose(z).coeffs == f.coeffs
    zz = PowerSeries([0, 0, 1], N)
    assert list(f.compose(zz).coeffs[:7]) == [1, 0, 1, 0, 1, 0, 1]


def test_series_error_paths():
    N = 6
    with pytest.raises(DivByZeroConstant):
        PowerSeries([1], N) / PowerSeries([0, 1], N)
    with pytest.raises(SqrtNonUnit):
        PowerSeries([2], N).sqrt()
    with pytest.raises(ComposeNonzeroConstant):
        geometric(N).compose(PowerSeries([1, 1], N))


def test_series_integer_coeffs_guard():
    f = PowerSeries([Fraction(1, 2)], 4)
    with pytest.raises(NonIntegralCoefficient):
        f.integer_coeffs()


# =========================================================================
# closed formulas, checked against the exhaustive counter
# =========================================================================

def test_count_beta_k_rows(k4_rows):
    for n in range(1, 11):
        assert count_beta_k(n, 4) == k4_rows["1234"][n - 1]
    assert count_beta_k(3, 2) == 1


def test_count_sigma_k_rows(k4_rows):
    for n in range(1, 11):
        assert count_sigma_k(n, 4) == k4_rows["1/2/3/4"][n - 1]


def test_sagan_k3_rows():
    for n in range(1, 13):
        assert count_sigma_k(n, 3) == 2 ** (n - 1)
    pat = P("12/3")
    for n in range(1, 13):
        assert count_avoiders(n, pat) == 1 + n * (n - 1) // 2


def test_double_and_triple_sums(k4_rows):
    for n in range(1, 11):
        assert count_12_34(n) == k4_rows["12/34"][n - 1]
        assert count_1_234(n) == k4_rows["1/234"][n - 1]
        assert count_134_2(n) == k4_rows["134/2"][n - 1]
        assert count_12_3_4(n) == k4_rows["12/3/4"][n - 1]


def test_formulas_match_oracle_directly():
    # belt and braces for one mid-size n not present in the frozen table
    n = 11
    assert count_beta_k(n, 4) == count_avoiders(n, P("1234"))
    assert count_12_34(n) == count_avoiders(n, P("12/34"))


# =========================================================================
# generating functions
# =========================================================================

def test_gf_14_2_3(k4_rows):
    assert gf_coeffs_14_2_3(10) == [0] + list(k4_rows["14/2/3"])


def test_gf_1_24_3(k4_rows):
    assert gf_coeffs_1_24_3(10) == [0] + list(k4_rows["1/24/3"])


def test_gf_13_24_is_catalan(k4_rows, catalan):
    got = gf_coeffs_13_24(10)
    assert got == catalan[:11]
    assert got[1:] == list(k4_rows["13/24"])


def test_gf_14_23(k4_rows):
    assert gf_coeffs_14_23(10) == [1] + list(k4_rows["14/23"])


def test_gfs_agree_with_bell_below_threshold(bell):
    # every pattern of size 4 is present in nothing smaller than itself
    for fn in (gf_coeffs_14_2_3, gf_coeffs_1_24_3, gf_coeffs_13_24, gf_coeffs_14_23):
        row = fn(4)
        assert row[1:4] == bell[1:4]
        assert row[4] == bell[4] - 1


def test_gf_rational_guard():
    with pytest.raises(NonIntegralCoefficient):
        gf_coeffs_rational([1], [2, 1], 4)


def test_core_gf_pinned():
    g = core_gf_14_23(8)
    assert [g.coeffs[n] for n in (2, 3, 4)] == [1, 1, 3]
    assert g.coeffs[0] == 0 and g.coeffs[1] == 0
    for n in range(2, 9):
        assert g.coeffs[n] == len(generate_14_23_core(n))


# =========================================================================
# the capped refinement
# =========================================================================

def test_h_series_rows():
    H = h_series_check(6)
    assert H.rows[2] == (0, 1)
    assert H.rows[3] == (0, 1)
    assert H.rows[4] == (0, 2, 1)


def test_h_row_matches_cap_statistic():
    H = h_series_check(8)
    for n in range(2, 9):
        tally = {}
        for c in generate_14_23_core(n):
            tally[c.caps] = tally.get(c.caps, 0) + 1
        row = H.rows[n]
        for j, coef in enumerate(row):
            assert tally.get(j, 0) == coef


def test_h_at_one_is_core_gf():
    H = h_series_check(10)
    g = core_gf_14_23(10)
    assert list(H.at_t(1)) == list(g.coeffs)


def test_poly_div_guard():
    with pytest.raises(InexactDivision):
        _poly_div_one_minus_t((0, 1))
    assert _poly_div_one_minus_t((1, 0, -1)) == [1, 1]


# =========================================================================
# exponential cross-checks
# =========================================================================

def test_egf_crosschecks_k4(k4_rows):
    assert egf_crosscheck_beta_k(10, 4)[1:] == list(k4_rows["1234"])
    assert egf_crosscheck_sigma_k(10, 4)[1:] == list(k4_rows["1/2/3/4"])


def test_egf_crosschecks_k5(k5_rows):
    assert egf_crosscheck_beta_k(9, 5)[1:] == list(k5_rows["12345"])
    assert egf_crosscheck_sigma_k(9, 5)[1:] == list(k5_rows["1/2/3/4/5"])


def test_sigma_below_beta():
    for k in (3, 4, 5, 6, 7):
        for n in range(1, 13):
            s, b = count_sigma_k(n, k), count_beta_k(n, k)
            if n > k > 2:
                assert s < b
            else:
                assert s == b


# =========================================================================
# bivariate container behaviour
# =========================================================================

def test_bivariate_degree_guard():
    with pytest.raises(ValueError):
        BivariateSeries([(1,), (0, 1, 5)])


def test_bivariate_at_t():
    B = BivariateSeries([(0,), (0, 1), (0, 1, 1)])
    assert B.at_t(2) == [0, 2, 6]
