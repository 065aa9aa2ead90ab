"""Cauchy numbers and polynomials: classical, poly-, and higher-order kinds.

The classical Cauchy numbers are the moments of the falling factorial,

    C_n      = integral_0^1 (x)_n dx,
    Chat_n   = integral_0^1 (-x)_n dx.

The poly-Cauchy family integrates a *product* of k coordinates,

    pc1(n,k)(z) = int...int (x_1 x_2 ... x_k - z)_n dx_1 ... dx_k,

while the higher-order family integrates the *sum* of k coordinates,

    C_n^(k)(x)    = int...int (x_1 + ... + x_k - x)_n dx,
    Chat_n^(k)(x) = int...int (x - (x_1 + ... + x_k))_n dx,

with exponential generating functions (t/log(1+t))^k (1+t)^{-x} and
(t/((1+t)log(1+t)))^k (1+t)^x.

Every higher-order number is computable along several independent paths
(``CauchyMethod``): a Stirling-number sum, a multinomial convolution of
classical values, an EGF coefficient, a Bernoulli-polynomial bridge of
order n-k+1, and an iterated-antiderivative integration oracle.  The oracle
(``cube_integrate``/``product_integrate``) never touches Stirling numbers
or series, so agreement between paths is a genuine cross-check, not a
tautology.  Second-kind reflections are handled by flipping signs of odd
polynomial coefficients, never by re-deriving formulas.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .bernoulli import bernoulli_hi_poly
from .polynomial import Polynomial, falling_factorial, interpolate
from .series import PowerSeries, cauchy1_gf, cauchy2_gf, egf_coeff
from .stirling import compositions, multinomial, stirling1_signed, stirling1_unsigned


class CauchyKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class CauchyMethod(enum.Enum):
    STIRLING_SUM = "stirling_sum"
    CONVOLUTION = "convolution"
    GF_COEFF = "gf_coeff"
    BERNOULLI_BRIDGE = "bernoulli_bridge"
    INTEGRAL_ORACLE = "integral_oracle"


# -- integration oracles -------------------------------------------------------

def cube_integrate(p: Polynomial, k: int) -> Fraction:
    """Exact integral of p(x_1+...+x_k) over the unit k-cube.

    One coordinate is integrated out per round: with P the antiderivative of
    the current integrand q, the next integrand is u -> P(u+1) - P(u); after
    k rounds the remaining polynomial is evaluated at 0.  Only antiderivative,
    shift and evaluation are used, keeping this path independent of the
    combinatorial formulas it is used to check.
    """
    if k < 1:
        raise ValueError("k must be positive")
    q = p
    for _ in range(k):
        anti = q.antiderivative()
        q = anti.shift(1) - anti
    return q.evaluate(0)


def product_integrate(p: Polynomial, k: int) -> Fraction:
    """Exact integral of p(x_1*x_2*...*x_k) over the unit k-cube.

    Integrating one coordinate of p(v*x) in closed form maps the coefficient
    of v^m to itself divided by m+1, i.e. the antiderivative with its zero
    constant term dropped; after k rounds evaluate at v = 1.
    """
    if k < 1:
        raise ValueError("k must be positive")
    q = p
    for _ in range(k):
        q = Polynomial(q.antiderivative().coeffs[1:])
    return q.evaluate(1)


# -- classical numbers ----------------------------------------------------------

@lru_cache(maxsize=None)
def cauchy1(n: int) -> Fraction:
    """First-kind Cauchy number: sum_m S1(n,m)/(m+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum((Fraction(stirling1_signed(n, m), m + 1) for m in range(n + 1)),
               Fraction(0))


@lru_cache(maxsize=None)
def cauchy2(n: int) -> Fraction:
    """Second-kind Cauchy number: sum_m S1(n,m)(-1)^m/(m+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum((Fraction((-1) ** m * stirling1_signed(n, m), m + 1) for m in range(n + 1)),
               Fraction(0))


def classical_cauchy(n: int, kind: CauchyKind) -> Fraction:
    return cauchy1(n) if kind is CauchyKind.FIRST else cauchy2(n)


# -- poly-Cauchy family ----------------------------------------------------------

def _check_poly_args(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")


def poly_cauchy1(n: int, k: int) -> Fraction:
    """sum_m S1(n,m)/(m+1)^k, the k-fold product-integral of the falling factorial."""
    _check_poly_args(n, k)
    return sum((stirling1_signed(n, m) * Fraction(1, (m + 1) ** k) for m in range(n + 1)),
               Fraction(0))


def poly_cauchy2(n: int, k: int) -> Fraction:
    """(-1)^n sum_m [n m]/(m+1)^k (unsigned Stirling numbers)."""
    _check_poly_args(n, k)
    total = sum((stirling1_unsigned(n, m) * Fraction(1, (m + 1) ** k) for m in range(n + 1)),
                Fraction(0))
    return -total if n % 2 else total


def poly_cauchy_poly1(n: int, k: int, z: Fraction) -> Fraction:
    """First-kind poly-Cauchy polynomial value at z.

    Evaluates the explicit double sum
    sum_m [n m](-1)^(n-m) sum_i C(m,i)(-z)^i/(m-i+1)^k.
    """
    _check_poly_args(n, k)
    z = Fraction(z)
    total = Fraction(0)
    for m in range(n + 1):
        u = stirling1_unsigned(n, m)
        if u == 0:
            continue
        inner = sum((comb(m, i) * (-z) ** i * Fraction(1, (m - i + 1) ** k)
                     for i in range(m + 1)), Fraction(0))
        total += (-1) ** (n - m) * u * inner
    return total


def poly_cauchy_poly2(n: int, k: int, z: Fraction) -> Fraction:
    """Second-kind poly-Cauchy polynomial value at z.

    Evaluates sum_m [n m](-1)^n sum_i C(m,i)(-z)^i/(m-i+1)^k.
    """
    _check_poly_args(n, k)
    z = Fraction(z)
    total = Fraction(0)
    for m in range(n + 1):
        u = stirling1_unsigned(n, m)
        if u == 0:
            continue
        inner = sum((comb(m, i) * (-z) ** i * Fraction(1, (m - i + 1) ** k)
                     for i in range(m + 1)), Fraction(0))
        total += u * inner
    return -total if n % 2 else total


# -- higher-order numbers ----------------------------------------------------------

@lru_cache(maxsize=None)
def _sum_power_volume(l: int, k: int) -> Fraction:
    """Integral of (x_1+...+x_k)^l over the unit k-cube, as the composition sum

    sum_{l_1+...+l_k = l} multinomial(l; parts) / ((l_1+1)...(l_k+1)).
    """
    if k == 0:
        return Fraction(1) if l == 0 else Fraction(0)
    total = Fraction(0)
    for parts in compositions(l, k):
        denom = 1
        for p in parts:
            denom *= p + 1
        total += Fraction(multinomial(l, parts), denom)
    return total


@lru_cache(maxsize=None)
def _hi_gf(kind: CauchyKind, k: int, order: int) -> PowerSeries:
    base = cauchy1_gf(order) if kind is CauchyKind.FIRST else cauchy2_gf(order)
    return base ** k


@lru_cache(maxsize=None)
def _convolution_first(n: int, k: int) -> Fraction:
    if k == 0:
        return Fraction(1) if n == 0 else Fraction(0)
    total = Fraction(0)
    for parts in compositions(n, k):
        prod = Fraction(multinomial(n, parts))
        for p in parts:
            prod *= cauchy1(p)
        total += prod
    return total


def _check_hi_args(n: int, k: int, method: CauchyMethod) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0 and method is CauchyMethod.INTEGRAL_ORACLE:
        raise ValueError("the integral oracle needs k >= 1")


def cauchy_hi1(n: int, k: int, method: CauchyMethod = CauchyMethod.GF_COEFF) -> Fraction:
    """Higher-order Cauchy number of the first kind, by the chosen path.

    All methods agree; the agreement over a grid is the package's master
    cross-check.  k = 0 degenerates to the Kronecker delta at n = 0.
    """
    _check_hi_args(n, k, method)
    if method is CauchyMethod.STIRLING_SUM:
        return sum((stirling1_signed(n, l) * _sum_power_volume(l, k) for l in range(n + 1)),
                   Fraction(0))
    if method is CauchyMethod.CONVOLUTION:
        return _convolution_first(n, k)
    if method is CauchyMethod.GF_COEFF:
        return egf_coeff(_hi_gf(CauchyKind.FIRST, k, n + 1), n)
    if method is CauchyMethod.BERNOULLI_BRIDGE:
        return bernoulli_hi_poly(n, n - k + 1).evaluate(1)
    return cube_integrate(falling_factorial(n), k)


def cauchy_hi2(n: int, k: int, method: CauchyMethod = CauchyMethod.GF_COEFF) -> Fraction:
    """Higher-order Cauchy number of the second kind, by the chosen path.

    Four paths are defined (no classical-convolution form exists for this
    kind); the integrand is the falling factorial of the negated sum.
    """
    _check_hi_args(n, k, method)
    if method is CauchyMethod.STIRLING_SUM:
        return sum(((-1) ** l * stirling1_signed(n, l) * _sum_power_volume(l, k)
                    for l in range(n + 1)), Fraction(0))
    if method is CauchyMethod.CONVOLUTION:
        raise ValueError("convolution path is defined only for the first kind")
    if method is CauchyMethod.GF_COEFF:
        return egf_coeff(_hi_gf(CauchyKind.SECOND, k, n + 1), n)
    if method is CauchyMethod.BERNOULLI_BRIDGE:
        return bernoulli_hi_poly(n, n - k + 1).evaluate(1 - k)
    return cube_integrate(falling_factorial(n).reflect(), k)


# -- higher-order polynomials -------------------------------------------------------

def cauchy_hi_poly1_sum(n: int, k: int) -> Polynomial:
    """C_n^(k)(x) from the explicit triple sum

    sum_l sum_j sum_{j_1+..+j_k=j} multinomial(j;parts) C(l,j) S1(n,l)
        (-x)^(l-j) / ((j_1+1)...(j_k+1)),

    with the composition sum folded into the cube volume of degree j.
    """
    _check_poly_args(n, k)
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        s1 = stirling1_signed(n, l)
        if s1 == 0:
            continue
        for j in range(l + 1):
            weight = s1 * comb(l, j) * _sum_power_volume(j, k) * (-1) ** (l - j)
            coeffs[l - j] += weight
    return Polynomial(coeffs)


def cauchy_hi_poly2_sum(n: int, k: int) -> Polynomial:
    """Chat_n^(k)(x) from the explicit triple sum with alternating inner signs."""
    _check_poly_args(n, k)
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        s1 = stirling1_signed(n, l)
        if s1 == 0:
            continue
        for i in range(l + 1):
            weight = s1 * comb(l, i) * _sum_power_volume(i, k) * (-1) ** i
            coeffs[l - i] += weight
    return Polynomial(coeffs)


def cauchy_hi_poly1_bridge(n: int, k: int) -> Polynomial:
    """C_n^(k)(x) as the reflected Bernoulli polynomial B_n^(n-k+1)(1-x)."""
    _check_poly_args(n, k)
    return bernoulli_hi_poly(n, n - k + 1).reflect().shift(-1)


def cauchy_hi_poly2_bridge(n: int, k: int) -> Polynomial:
    """Chat_n^(k)(x) as the shifted Bernoulli polynomial B_n^(n-k+1)(x-k+1)."""
    _check_poly_args(n, k)
    return bernoulli_hi_poly(n, n - k + 1).shift(1 - k)


def cauchy_hi_poly1_oracle(n: int, k: int) -> Polynomial:
    """C_n^(k)(x) by cube-integrating (u - x0)_n at x0 = 0..n and interpolating."""
    _check_poly_args(n, k)
    samples = [(Fraction(x0), cube_integrate(falling_factorial(n).shift(-x0), k))
               for x0 in range(n + 1)]
    return interpolate(samples)


def cauchy_hi_poly2_oracle(n: int, k: int) -> Polynomial:
    """Chat_n^(k)(x) by cube-integrating (x0 - u)_n at x0 = 0..n and interpolating."""
    _check_poly_args(n, k)
    samples = [(Fraction(x0), cube_integrate(falling_factorial(n).reflect().shift(-x0), k))
               for x0 in range(n + 1)]
    return interpolate(samples)


@lru_cache(maxsize=None)
def cauchy_hi_poly1(n: int, k: int) -> Polynomial:
    """Higher-order Cauchy polynomial of the first kind, degree n in x.

    Computed along the triple-sum and Bernoulli-bridge paths and compared
    coefficientwise; a mismatch would be an internal inconsistency.
    """
    by_sum = cauchy_hi_poly1_sum(n, k)
    by_bridge = cauchy_hi_poly1_bridge(n, k)
    if by_sum != by_bridge:
        raise ArithmeticError(
            f"first-kind polynomial paths disagree at n={n}, k={k}")
    return by_sum


@lru_cache(maxsize=None)
def cauchy_hi_poly2(n: int, k: int) -> Polynomial:
    """Higher-order Cauchy polynomial of the second kind, degree n in x."""
    by_sum = cauchy_hi_poly2_sum(n, k)
    by_bridge = cauchy_hi_poly2_bridge(n, k)
    if by_sum != by_bridge:
        raise ArithmeticError(
            f"second-kind polynomial paths disagree at n={n}, k={k}")
    return by_sum
