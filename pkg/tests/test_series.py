"""Power-series engine: arithmetic, composition, reversion, Sheffer machinery."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchykit.bernoulli import bernoulli_hi_poly
from cauchykit.cauchy import cauchy_hi_poly1, cube_integrate
from cauchykit.polynomial import Polynomial, falling_factorial
from cauchykit.series import (
    PowerSeries,
    bernoulli_gf,
    cauchy1_gf,
    connection_coeffs,
    egf_coeff,
    expm1_series,
    log1p_series,
    one_minus_exp_neg_series,
    one_plus_t_pow,
    one_series,
    sheffer_polys,
    t_series,
)
from cauchykit.stirling import stirling1_signed, stirling2

F = Fraction


def series(*coeffs, order=None):
    return PowerSeries([F(c) if isinstance(c, int) else c for c in coeffs], order=order)


# -- multiplication -----------------------------------------------------------

def test_mul_difference_of_squares():
    one_plus = series(1, 1, order=4)
    one_minus = series(1, -1, order=4)
    assert (one_plus * one_minus).coeffs == (F(1), F(0), F(-1), F(0))


def test_mul_identity():
    f = series(2, F(1, 3), 0, 5)
    assert f * one_series(4) == f


def test_mul_log_against_cauchy_gf_gives_t():
    product = log1p_series(8) * cauchy1_gf(8)
    assert product == t_series(8)


# -- division -----------------------------------------------------------------

def test_div_cancels_shared_power_of_t():
    quotient = t_series(5) / log1p_series(5)
    assert quotient.coeffs == (F(1), F(1, 2), F(-1, 12), F(1, 24))
    # EGF coefficients are the classical Cauchy numbers C_0..C_3
    assert [egf_coeff(quotient, n) for n in range(4)] == [F(1), F(1, 2), F(-1, 6), F(1, 4)]


def test_div_by_one():
    f = series(3, -1, F(2, 7), order=6)
    assert f / one_series(6) == f


def test_div_shifted_exponential():
    quotient = expm1_series(4) / t_series(4)
    assert quotient.coeffs == (F(1), F(1, 2), F(1, 6))


def test_div_zero_series_rejected():
    with pytest.raises(ZeroDivisionError):
        t_series(4) / PowerSeries([0], order=4)


def test_div_non_unit_divisor_rejected():
    t2 = series(0, 0, 1, order=5)
    with pytest.raises(ValueError, match="non-unit divisor"):
        t_series(5) / t2


def test_mul_div_round_trip_property():
    g = series(1, 4, -2, F(1, 5), 3, order=8)
    assert (one_series(8) / g) * g == one_series(8)


# -- integer powers --------------------------------------------------------------

def test_pow_zero_is_one():
    f = series(0, 2, 3, order=5)
    assert f ** 0 == one_series(5)


def test_pow_square():
    assert (series(1, 1, order=3) ** 2).coeffs == (F(1), F(2), F(1))


def test_negative_pow_gives_bernoulli_numbers():
    unit = expm1_series(4) / t_series(4)  # (e^t - 1)/t at order 3
    inverse = unit ** -1
    assert inverse.coeffs == (F(1), F(-1, 2), F(1, 12))
    assert [egf_coeff(inverse, j) for j in range(3)] == [F(1), F(-1, 2), F(1, 6)]


def test_negative_pow_needs_unit():
    with pytest.raises(ValueError, match="non-unit base"):
        t_series(4) ** -1


# -- log(1+t) ----------------------------------------------------------------------

def test_log1p_mercator():
    assert log1p_series(4).coeffs == (F(0), F(1), F(-1, 2), F(1, 3))


def test_log1p_linear_coefficient():
    assert log1p_series(2).coefficient(1) == 1


def test_log1p_cube_extracts_signed_stirling():
    cubed = log1p_series(7) ** 3
    value = factorial(6) * (cubed.coefficient(6) / factorial(3))
    # signed value; the unsigned triangle carries 225 at (6,3)
    assert value == stirling1_signed(6, 3) == -225


# -- exp ---------------------------------------------------------------------------

def test_exp_of_t():
    assert t_series(4).exp().coeffs == (F(1), F(1), F(1, 2), F(1, 6))


def test_exp_of_zero():
    assert PowerSeries([0], order=5).exp() == one_series(5)


def test_exp_log_round_trip():
    result = log1p_series(10).exp()
    assert result.coeffs == (F(1), F(1)) + (F(0),) * 8


def test_exp_needs_zero_constant_term():
    with pytest.raises(ValueError):
        one_series(4).exp()


# -- composition --------------------------------------------------------------------

def test_compose_with_t_is_identity():
    f = series(5, 1, F(-2, 3), 7, order=6)
    assert f.compose(t_series(6)) == f


def test_compose_mutual_inverses():
    assert expm1_series(10).compose(log1p_series(10)) == t_series(10)


def test_compose_geometric_with_t_squared():
    geometric = one_series(6) / series(1, -1, order=6)
    t_squared = series(0, 0, 1, order=6)
    assert geometric.compose(t_squared).coeffs == (F(1), F(0), F(1), F(0), F(1), F(0))


def test_compose_needs_zero_constant_term():
    with pytest.raises(ValueError, match="zero constant term"):
        t_series(4).compose(one_series(4))


# -- reversion -----------------------------------------------------------------------

def test_revert_identity():
    assert t_series(6).revert() == t_series(6)


def test_revert_expm1_is_log1p():
    assert expm1_series(10).revert() == log1p_series(10)


def test_revert_exp_neg_minus_one():
    f = -one_minus_exp_neg_series(10)  # e^{-t} - 1
    assert f.revert() == -log1p_series(10)


def test_revert_rejects_non_delta_series():
    with pytest.raises(ValueError, match="not a delta series"):
        one_series(5).revert()
    with pytest.raises(ValueError, match="not a delta series"):
        series(0, 0, 1, order=5).revert()


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
delta_series_12 = st.lists(small_fractions, min_size=10, max_size=10).map(
    lambda tail: PowerSeries([F(0), F(1)] + tail))


@settings(max_examples=50, derandomize=True, deadline=None)
@given(delta_series_12)
def test_revert_round_trip(f):
    assert f.compose(f.revert()) == t_series(12)


unit_series_10 = st.lists(small_fractions, min_size=9, max_size=9).map(
    lambda rest: PowerSeries([F(1)] + rest))


@settings(max_examples=50, derandomize=True, deadline=None)
@given(unit_series_10)
def test_div_inverse_round_trip(g):
    assert (one_series(10) / g) * g == one_series(10)


# -- EGF coefficients -----------------------------------------------------------------

def test_egf_coeff_basics():
    gf = cauchy1_gf(3)
    assert egf_coeff(gf, 0) == 1
    assert egf_coeff(gf, 2) == F(-1, 6)


def test_egf_coeff_of_squared_gf_matches_integral_oracle():
    squared = cauchy1_gf(3) ** 2
    assert egf_coeff(squared, 2) == F(1, 6)
    assert egf_coeff(squared, 2) == cube_integrate(falling_factorial(2), 2)


def test_egf_coeff_insufficient_truncation():
    with pytest.raises(ValueError, match="insufficient truncation"):
        egf_coeff(cauchy1_gf(3), 3)


# -- truncation discipline --------------------------------------------------------------

def test_equality_at_common_precision():
    assert cauchy1_gf(4) == cauchy1_gf(9)


@pytest.mark.parametrize("make", [log1p_series, expm1_series, cauchy1_gf,
                                  lambda n: bernoulli_gf(2, n)])
def test_recompute_then_truncate_is_exact(make):
    low, high = make(6), make(11)
    assert high.truncate(6).coeffs == low.coeffs


def test_truncate_bounds():
    with pytest.raises(ValueError):
        log1p_series(4).truncate(9)


# -- Stirling generating identities -------------------------------------------------------

@pytest.mark.parametrize("n", range(7))
def test_log_powers_generate_signed_stirling(n):
    power = log1p_series(12) ** n
    for l in range(12):
        expected = F(factorial(n) * stirling1_signed(l, n), factorial(l))
        assert power.coefficient(l) == expected


@pytest.mark.parametrize("n", range(7))
def test_expm1_powers_generate_second_kind_stirling(n):
    power = expm1_series(12) ** n
    for l in range(12):
        expected = F(factorial(n) * stirling2(l, n), factorial(l))
        assert power.coefficient(l) == expected


# -- polynomial-coefficient series ----------------------------------------------------------

def test_one_plus_t_pow_gives_binomial_polynomials():
    gf = one_plus_t_pow(Polynomial.x(), 7)
    for j in range(7):
        expected = falling_factorial(j) / factorial(j)  # binom(x, j)
        assert gf.coeffs[j] == expected


@pytest.mark.parametrize("e", range(1, 6))
def test_bernoulli_generating_identity_shifted(e):
    # (t/log(1+t))^e (1+t)^(x-1) has j-th EGF coefficient B_j^(j-e+1)(x)
    gf = (cauchy1_gf(9) ** e) * one_plus_t_pow(Polynomial((-1, 1)), 9)
    for j in range(9):
        assert egf_coeff(gf, j) == bernoulli_hi_poly(j, j - e + 1)


@pytest.mark.parametrize("e", range(1, 6))
def test_bernoulli_generating_identity_unshifted(e):
    # (t/log(1+t))^e (1+t)^x has j-th EGF coefficient B_j^(j-e+1)(x+1)
    gf = (cauchy1_gf(9) ** e) * one_plus_t_pow(Polynomial.x(), 9)
    for j in range(9):
        assert egf_coeff(gf, j) == bernoulli_hi_poly(j, j - e + 1).shift(1)


# -- Sheffer machinery --------------------------------------------------------------------

def test_sheffer_identity_pair_gives_monomials():
    polys = sheffer_polys(one_series(6), t_series(6), 5)
    for n, p in enumerate(polys):
        assert p == Polynomial.monomial(n)


def test_sheffer_exponential_pair_gives_falling_factorials():
    polys = sheffer_polys(one_series(8), expm1_series(8), 6)
    for n, p in enumerate(polys):
        assert p == falling_factorial(n)


def test_sheffer_cauchy_pair_matches_first_kind_polynomials():
    g = t_series(9) / one_minus_exp_neg_series(9)
    f = -one_minus_exp_neg_series(8)
    polys = sheffer_polys(g, f, 6)
    for n, p in enumerate(polys):
        assert p == cauchy_hi_poly1(n, 1)
        assert p.degree == n


def test_sheffer_needs_enough_truncation():
    with pytest.raises(ValueError, match="insufficient truncation"):
        sheffer_polys(one_series(4), t_series(4), 4)


def test_connection_same_pair_is_identity_matrix():
    g = one_series(8)
    f = expm1_series(8)
    rows = connection_coeffs(g, f, g, f, 5)
    for n, row in enumerate(rows):
        for m, value in enumerate(row):
            assert value == (1 if n == m else 0)


def test_connection_single_entry_is_constant_ratio():
    g = series(4, 1, 1, order=4)
    h = series(3, -2, order=4)
    rows = connection_coeffs(g, t_series(4), h, t_series(4), 0)
    assert rows == [[F(3, 4)]]


def test_connection_rejects_bad_inputs():
    with pytest.raises(ValueError, match="invertible series required"):
        connection_coeffs(one_series(6), t_series(6), t_series(6), t_series(6), 3)
    with pytest.raises(ValueError, match="not a delta series"):
        connection_coeffs(one_series(6), t_series(6), one_series(6), one_series(6), 3)


def test_connection_between_cauchy_and_bernoulli_bases():
    # expanding second-kind order-k polynomials in order-alpha Bernoulli
    # polynomials: C[n][m] = sum_l C(n,l) S1(n-l,m) Chat_l^(k+alpha)(alpha)
    from cauchykit.cauchy import cauchy_hi_poly2
    from cauchykit.stirling import stirling1_signed

    k, alpha, n_max = 1, 1, 4
    order = n_max + 2
    exp_t = expm1_series(order) + 1
    g = ((t_series(order) * exp_t) / expm1_series(order + 1)) ** k
    f = expm1_series(order)
    h = (expm1_series(order + 1) / t_series(order + 1)) ** alpha
    rows = connection_coeffs(g, f, h, t_series(order), n_max)
    for n in range(n_max + 1):
        for m in range(n + 1):
            expected = sum(
                (comb(n, l) * stirling1_signed(n - l, m)
                 * cauchy_hi_poly2(l, k + alpha).evaluate(alpha)
                 for l in range(n - m + 1)), F(0))
            assert rows[n][m] == expected
