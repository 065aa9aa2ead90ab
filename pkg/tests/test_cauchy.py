"""Cauchy families: classical, poly-, higher-order; all computation paths."""

from fractions import Fraction

import pytest

from cauchykit.cauchy import (
    CauchyKind,
    CauchyMethod,
    cauchy1,
    cauchy2,
    cauchy_hi1,
    cauchy_hi2,
    cauchy_hi_poly1,
    cauchy_hi_poly1_oracle,
    cauchy_hi_poly2,
    cauchy_hi_poly2_oracle,
    classical_cauchy,
    cube_integrate,
    poly_cauchy1,
    poly_cauchy2,
    poly_cauchy_poly1,
    poly_cauchy_poly2,
    product_integrate,
)
from cauchykit.bernoulli import bernoulli_hi_poly
from cauchykit.polynomial import Polynomial, falling_factorial

F = Fraction

ALL_METHODS = tuple(CauchyMethod)
SECOND_KIND_METHODS = tuple(m for m in CauchyMethod if m is not CauchyMethod.CONVOLUTION)

# values fixed from the iterated-integral oracle
CLASSICAL_FIRST = [F(1), F(1, 2), F(-1, 6), F(1, 4), F(-19, 30), F(9, 4),
                   F(-863, 84), F(1375, 24)]
CLASSICAL_SECOND = [F(1), F(-1, 2), F(5, 6), F(-9, 4), F(251, 30), F(-475, 12),
                    F(19087, 84), F(-36799, 24)]


def test_classical_first_kind_table():
    assert [cauchy1(n) for n in range(8)] == CLASSICAL_FIRST


def test_classical_second_kind_table():
    assert [cauchy2(n) for n in range(8)] == CLASSICAL_SECOND


def test_classical_against_integral_oracle():
    for n in range(12):
        assert cauchy1(n) == cube_integrate(falling_factorial(n), 1)
        assert cauchy2(n) == cube_integrate(falling_factorial(n).reflect(), 1)


def test_classical_kind_dispatch():
    assert classical_cauchy(4, CauchyKind.FIRST) == F(-19, 30)
    assert classical_cauchy(2, CauchyKind.SECOND) == F(5, 6)


# -- integration oracles ------------------------------------------------------

def test_cube_integrate_constant():
    for k in range(1, 6):
        assert cube_integrate(Polynomial.one(), k) == 1


def test_cube_integrate_linear():
    assert cube_integrate(Polynomial.x(), 1) == F(1, 2)


def test_cube_integrate_falling_factorial():
    assert cube_integrate(falling_factorial(2), 2) == F(1, 6)


def test_cube_integrate_needs_positive_k():
    with pytest.raises(ValueError):
        cube_integrate(Polynomial.one(), 0)


def test_product_integrate_monomials():
    # int over the k-cube of (x_1...x_k)^m is 1/(m+1)^k
    for k in range(1, 5):
        for m in range(5):
            assert product_integrate(Polynomial.monomial(m), k) == F(1, (m + 1) ** k)


def test_product_and_cube_agree_for_one_variable():
    p = Polynomial((F(1, 3), -2, 0, 5))
    assert product_integrate(p, 1) == cube_integrate(p, 1)


# -- poly-Cauchy family ----------------------------------------------------------

def test_poly_cauchy_first_examples():
    assert poly_cauchy1(1, 2) == F(1, 4)
    assert poly_cauchy1(2, 2) == F(-5, 36)
    for n in range(11):
        assert poly_cauchy1(n, 1) == cauchy1(n)


def test_poly_cauchy_second_examples():
    for k in range(1, 4):
        assert poly_cauchy2(0, k) == 1
    assert poly_cauchy2(1, 2) == F(-1, 4)
    for n in range(11):
        assert poly_cauchy2(n, 1) == cauchy2(n)


def test_poly_cauchy_against_product_oracle():
    for n in range(9):
        ff = falling_factorial(n)
        for k in range(1, 4):
            assert poly_cauchy1(n, k) == product_integrate(ff, k)
            assert poly_cauchy2(n, k) == product_integrate(ff.reflect(), k)


def test_poly_cauchy_rejects_bad_arguments():
    with pytest.raises(ValueError):
        poly_cauchy1(-1, 2)
    with pytest.raises(ValueError):
        poly_cauchy1(3, 0)


@pytest.mark.parametrize("z", [F(0), F(1), F(-1), F(1, 2), F(-3, 7)])
def test_poly_cauchy_polynomials_linear_case(z):
    assert poly_cauchy_poly1(1, 1, z) == F(1, 2) - z
    assert poly_cauchy_poly2(1, 1, z) == z - F(1, 2)


def test_poly_cauchy_polynomials_at_zero_reduce_to_numbers():
    for n in range(7):
        for k in range(1, 4):
            assert poly_cauchy_poly1(n, k, F(0)) == poly_cauchy1(n, k)
            assert poly_cauchy_poly2(n, k, F(0)) == poly_cauchy2(n, k)


def test_poly_cauchy_polynomial_shifted_value():
    # (u-1)_2 integrated once: u^2-3u+2 -> 1/3 - 3/2 + 2
    assert poly_cauchy_poly1(2, 1, F(1)) == F(5, 6)
    assert poly_cauchy_poly1(2, 1, F(1)) == product_integrate(
        falling_factorial(2).shift(-1), 1)


def test_poly_cauchy_polynomial_against_oracle():
    zs = [F(0), F(1), F(-1), F(1, 2), F(-3, 7)]
    for n in range(7):
        ff = falling_factorial(n)
        for k in range(1, 4):
            for z in zs:
                assert poly_cauchy_poly1(n, k, z) == product_integrate(ff.shift(-z), k)
                assert poly_cauchy_poly2(n, k, z) == product_integrate(
                    ff.reflect().shift(-z), k)


# -- higher-order numbers -----------------------------------------------------------

def test_hi1_base_cases():
    for k in range(6):
        for method in ALL_METHODS:
            if k == 0 and method is CauchyMethod.INTEGRAL_ORACLE:
                continue
            assert cauchy_hi1(0, k, method) == 1


def test_hi1_examples():
    for method in ALL_METHODS:
        assert cauchy_hi1(1, 2, method) == 1
        assert cauchy_hi1(2, 2, method) == F(1, 6)


def test_hi1_small_table():
    assert [cauchy_hi1(n, 2) for n in range(6)] == [
        F(1), F(1), F(1, 6), F(0), F(-1, 10), F(1, 2)]


def test_hi2_examples():
    for method in SECOND_KIND_METHODS:
        assert cauchy_hi2(0, 3, method) == 1
        assert cauchy_hi2(1, 2, method) == -1
        assert cauchy_hi2(2, 1, method) == F(5, 6)


def test_hi2_small_table():
    assert [cauchy_hi2(n, 2) for n in range(6)] == [
        F(1), F(-1), F(13, 6), F(-7), F(299, 10), F(-317, 2)]


def test_all_methods_agree_on_a_grid():
    for n in range(9):
        for k in range(1, 4):
            first = {m: cauchy_hi1(n, k, m) for m in ALL_METHODS}
            assert len(set(first.values())) == 1, (n, k, first)
            second = {m: cauchy_hi2(n, k, m) for m in SECOND_KIND_METHODS}
            assert len(set(second.values())) == 1, (n, k, second)


def test_k_zero_convention():
    for method in (CauchyMethod.STIRLING_SUM, CauchyMethod.CONVOLUTION,
                   CauchyMethod.GF_COEFF, CauchyMethod.BERNOULLI_BRIDGE):
        assert cauchy_hi1(0, 0, method) == 1
        for n in range(1, 6):
            assert cauchy_hi1(n, 0, method) == 0
    for method in (CauchyMethod.STIRLING_SUM, CauchyMethod.GF_COEFF,
                   CauchyMethod.BERNOULLI_BRIDGE):
        assert cauchy_hi2(0, 0, method) == 1
        for n in range(1, 6):
            assert cauchy_hi2(n, 0, method) == 0


def test_integral_oracle_needs_positive_k():
    with pytest.raises(ValueError):
        cauchy_hi1(3, 0, CauchyMethod.INTEGRAL_ORACLE)


def test_second_kind_has_no_convolution_path():
    with pytest.raises(ValueError, match="first kind"):
        cauchy_hi2(3, 2, CauchyMethod.CONVOLUTION)


def test_argument_validation():
    with pytest.raises(ValueError):
        cauchy_hi1(-1, 2)
    with pytest.raises(ValueError):
        cauchy_hi2(2, -1)


def test_k_one_degenerates_to_classical():
    for n in range(21):
        assert cauchy_hi1(n, 1) == cauchy1(n)
        assert cauchy_hi2(n, 1) == cauchy2(n)


# -- higher-order polynomials ----------------------------------------------------------

def test_hi_poly1_linear():
    assert cauchy_hi_poly1(1, 1) == Polynomial((F(1, 2), -1))


def test_hi_poly1_quadratic_flat():
    # fixed from the integral oracle: x^2 - x + 1/6
    assert cauchy_hi_poly1(2, 2) == Polynomial((F(1, 6), -1, 1))
    assert cauchy_hi_poly1(2, 2) == cauchy_hi_poly1_oracle(2, 2)


def test_hi_poly1_cubic():
    assert cauchy_hi_poly1(3, 2) == Polynomial((0, F(1, 2), 0, -1))


def test_hi_poly2_examples():
    assert cauchy_hi_poly2(1, 1) == Polynomial((F(-1, 2), 1))
    assert cauchy_hi_poly2(1, 2) == Polynomial((-1, 1))
    assert cauchy_hi_poly2(2, 2) == Polynomial((F(13, 6), -3, 1))


def test_hi_poly_constant_terms_are_numbers():
    for n in range(9):
        for k in range(1, 4):
            assert cauchy_hi_poly1(n, k).constant == cauchy_hi1(n, k)
            assert cauchy_hi_poly2(n, k).constant == cauchy_hi2(n, k)


def test_hi_poly_degrees():
    for n in range(9):
        for k in range(1, 4):
            assert cauchy_hi_poly1(n, k).degree == n
            assert cauchy_hi_poly2(n, k).degree == n


def test_reflection_structure():
    # first kind equals the reflected Bernoulli polynomial of order n-k+1
    for n in range(11):
        for k in range(1, 4):
            bridge = bernoulli_hi_poly(n, n - k + 1)
            assert cauchy_hi_poly1(n, k) == bridge.reflect().shift(-1)
            assert cauchy_hi_poly2(n, k) == bridge.shift(1 - k)


def test_hi_poly_against_interpolated_oracle():
    for n in range(8):
        for k in range(1, 4):
            assert cauchy_hi_poly1(n, k) == cauchy_hi_poly1_oracle(n, k)
            assert cauchy_hi_poly2(n, k) == cauchy_hi_poly2_oracle(n, k)


def test_oracle_supremacy_for_numbers():
    # every closed-form path equals the cube oracle on the stated grid
    for n in range(13):
        ff = falling_factorial(n)
        for k in range(1, 5):
            by_oracle = cube_integrate(ff, k)
            for method in ALL_METHODS:
                assert cauchy_hi1(n, k, method) == by_oracle
            by_oracle2 = cube_integrate(ff.reflect(), k)
            for method in SECOND_KIND_METHODS:
                assert cauchy_hi2(n, k, method) == by_oracle2
