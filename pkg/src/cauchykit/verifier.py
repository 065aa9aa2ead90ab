"""Mechanical verification of the identity catalogue over exact rationals.

Every named check re-derives both sides of one identity through independent
code paths and compares them exactly, polynomial identities by coefficient
vectors, never by sampling.  A check first runs the identity *as printed*;
if that fails and a corrected reading is registered (an evident typo fix),
the corrected form is run and, when it passes, the report carries status
``pass_with_correction`` together with the printed-form counterexamples.
The point is to distinguish "true as printed" from "true under the obvious
fix" and to hide neither outcome.

Reports are plain data: deterministic, JSON-serialisable, byte-stable
across runs for a fixed grid.  Checks are independent of each other and of
execution order.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, perm
from typing import Callable, Iterable, Iterator

from .bernoulli import bernoulli_hi_poly
from .cauchy import (
    CauchyMethod,
    cauchy_hi1,
    cauchy_hi2,
    cauchy_hi_poly1,
    cauchy_hi_poly1_oracle,
    cauchy_hi_poly1_sum,
    cauchy_hi_poly2,
    cauchy_hi_poly2_oracle,
    cauchy_hi_poly2_sum,
    poly_cauchy1,
    poly_cauchy2,
    poly_cauchy_poly1,
    poly_cauchy_poly2,
    product_integrate,
)
from .polynomial import Polynomial, falling_factorial, rising_factorial
from .rational import format_rational
from .series import (
    PowerSeries,
    cauchy1_gf,
    expm1_series,
    log1p_series,
    one_minus_exp_neg_series,
    one_plus_t_pow,
    sheffer_polys,
    connection_coeffs,
    egf_coeff,
    t_series,
)
from .stirling import stirling1_signed, stirling2

PASS = "pass"
FAIL = "fail"
PASS_WITH_CORRECTION = "pass_with_correction"


class CheckId(enum.Enum):
    """Identifiers of the executable identity checks, in suite order."""

    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"
    T10 = "T10"
    L11 = "L11"
    T12 = "T12"
    T13 = "T13"
    EQ6 = "EQ6"
    EQ7 = "EQ7"
    EQ19 = "EQ19"
    EQ28 = "EQ28"
    EQ52 = "EQ52"
    EQ53 = "EQ53"
    EQ58 = "EQ58"
    EQ59_61 = "EQ59_61"
    POLYC_ORACLE = "POLYC_ORACLE"


CHECK_SUMMARIES: dict[CheckId, str] = {
    CheckId.T1: "order-k first-kind numbers equal Bernoulli values B_n^(n-k+1)(1)",
    CheckId.T2: "multinomial convolution and Stirling sum both give the defining integral",
    CheckId.T3: "S2(m+k,k) from binomially weighted first-kind numbers (both displays)",
    CheckId.T4: "first-kind polynomials: triple sum and B_n^(n-k+1)(1-x) and the integral",
    CheckId.T5: "first-kind polynomial / S2 resummation identity",
    CheckId.T6: "second-kind numbers / S2 resummation identity with (-k) powers",
    CheckId.T7: "second-kind polynomials: triple sum and B_n^(n-k+1)(x-k+1) and the integral",
    CheckId.T8: "second-kind polynomial / S2 resummation identity with (x-k) powers",
    CheckId.T9: "reciprocity: (-1)^n C_n^(k)(x)/n! as a binomial sum of second-kind terms",
    CheckId.T10: "reciprocity: (-1)^n Chat_n^(k)(x)/n! as a binomial sum of first-kind terms",
    CheckId.L11: "difference equations n*C_(n-1)^(k)(x) = C_n^(k)(x-1) - C_n^(k)(x), both kinds",
    CheckId.T12: "umbral closed forms of both polynomial kinds in the monomial/(x-k) bases",
    CheckId.T13: "second-kind polynomials expanded in Bernoulli polynomials of order alpha",
    CheckId.EQ6: "powers of log(1+t) generate signed first-kind Stirling numbers",
    CheckId.EQ7: "powers of e^t-1 generate second-kind Stirling numbers",
    CheckId.EQ19: "(t/log(1+t))^e (1+t)^(x-1) generates B_j^(j-e+1)(x)",
    CheckId.EQ28: "(t/log(1+t))^e (1+t)^x generates B_j^(j-e+1)(x+1)",
    CheckId.EQ52: "first-kind polynomials are the Sheffer sequence for ((t/(1-e^-t))^k, e^-t-1)",
    CheckId.EQ53: "second-kind polynomials are the Sheffer sequence for ((te^t/(e^t-1))^k, e^t-1)",
    CheckId.EQ58: "(t/(1-e^-t))^k maps C_n^(k)(x) to the signed rising factorial",
    CheckId.EQ59_61: "operator expansions behind the umbral closed forms, as printed",
    CheckId.POLYC_ORACLE: "poly-Cauchy explicit formulas against the product-integral oracle",
}

TAG_T13_INDEX = "expansion term B_n^(alpha)(x) read as B_m^(alpha)(x) under the summation index m"
TAG_SIGN_FIRST_KIND = "first-kind umbral expansion sign (-1)^(k-m) read as (-1)^m (stray (-1)^k dropped)"
TAG_POLYC_INDEX = "defining-integral index m read as n"
TAG_POLYC_PROSE = "second-kind explicit formula with second-kind Stirling numbers per the prose"


@dataclass(frozen=True)
class Grid:
    """Parameter ranges swept by a check; negative bounds give empty ranges."""

    n_max: int = 15
    k_max: int = 4
    alpha_max: int = 3
    x_samples: tuple[Fraction, ...] = (
        Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-3, 7))

    def ns(self) -> range:
        return range(0, self.n_max + 1)

    def ks(self) -> range:
        return range(1, self.k_max + 1)

    def alphas(self) -> range:
        return range(1, self.alpha_max + 1)

    def to_json_obj(self) -> dict:
        return {
            "n_max": self.n_max,
            "k_max": self.k_max,
            "alpha_max": self.alpha_max,
            "x_samples": [format_rational(x) for x in self.x_samples],
        }


DEFAULT_GRID = Grid()


@dataclass(frozen=True)
class Counterexample:
    params: dict
    lhs: str
    rhs: str

    def to_json_obj(self) -> dict:
        return {"params": self.params, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class TheoremReport:
    id: CheckId
    grid: Grid
    status: str
    cases_checked: int
    counterexamples: tuple[Counterexample, ...] = ()
    corrected_reading: str | None = None

    @property
    def vacuous(self) -> bool:
        return self.cases_checked == 0

    def to_json_obj(self) -> dict:
        obj = {
            "id": self.id.value,
            "grid": self.grid.to_json_obj(),
            "status": self.status,
            "cases_checked": self.cases_checked,
            "counterexamples": [c.to_json_obj() for c in self.counterexamples],
        }
        if self.corrected_reading is not None:
            obj["corrected_reading"] = self.corrected_reading
        return obj


Case = tuple[dict, object, object]
_MAX_COUNTEREXAMPLES = 5


def _fmt(value) -> str:
    if isinstance(value, Polynomial):
        return "[" + ",".join(format_rational(c) for c in value.coeffs) + "]"
    return format_rational(value)


def _execute(cases: Iterable[Case]) -> tuple[int, list[Counterexample]]:
    checked = 0
    failures: list[Counterexample] = []
    for params, lhs, rhs in cases:
        checked += 1
        if lhs != rhs:
            if len(failures) < _MAX_COUNTEREXAMPLES:
                failures.append(Counterexample(dict(params), _fmt(lhs), _fmt(rhs)))
    return checked, failures


# -- individual checks ------------------------------------------------------------
#
# Each generator yields (params, lhs, rhs) in a fixed nested order, so the
# first failure is the lexicographically minimal one for that ordering.

def _cases_t1(grid: Grid) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            yield ({"n": n, "k": k},
                   cauchy_hi1(n, k, CauchyMethod.GF_COEFF),
                   bernoulli_hi_poly(n, n - k + 1).evaluate(1))


def _cases_t2(grid: Grid) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            oracle = cauchy_hi1(n, k, CauchyMethod.INTEGRAL_ORACLE)
            yield ({"n": n, "k": k, "form": "convolution"},
                   cauchy_hi1(n, k, CauchyMethod.CONVOLUTION), oracle)
            yield ({"n": n, "k": k, "form": "stirling_sum"},
                   cauchy_hi1(n, k, CauchyMethod.STIRLING_SUM), oracle)


def _cases_t3(grid: Grid) -> Iterator[Case]:
    for m in grid.ns():
        for k in grid.ks():
            lhs = Fraction(stirling2(m + k, k))
            front = comb(m + k, m)
            yield ({"m": m, "k": k, "form": "cauchy_sum"}, lhs,
                   front * sum((cauchy_hi1(n, k, CauchyMethod.GF_COEFF) * stirling2(m, n)
                                for n in range(m + 1)), Fraction(0)))
            yield ({"m": m, "k": k, "form": "bernoulli_sum"}, lhs,
                   front * sum((bernoulli_hi_poly(n, n - k + 1).evaluate(1) * stirling2(m, n)
                                for n in range(m + 1)), Fraction(0)))


def _poly_pair_cases(grid: Grid, sum_form, oracle_form, hi_poly) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            by_sum = sum_form(n, k)
            yield ({"n": n, "k": k, "form": "bernoulli_bridge"}, by_sum, hi_poly(n, k))
            yield ({"n": n, "k": k, "form": "integral_oracle"}, by_sum, oracle_form(n, k))


def _cases_t4(grid: Grid) -> Iterator[Case]:
    return _poly_pair_cases(grid, cauchy_hi_poly1_sum, cauchy_hi_poly1_oracle,
                            lambda n, k: bernoulli_hi_poly(n, n - k + 1).reflect().shift(-1))


def _cases_t7(grid: Grid) -> Iterator[Case]:
    return _poly_pair_cases(grid, cauchy_hi_poly2_sum, cauchy_hi_poly2_oracle,
                            lambda n, k: bernoulli_hi_poly(n, n - k + 1).shift(1 - k))


def _cases_t5(grid: Grid) -> Iterator[Case]:
    for m in grid.ns():
        for k in grid.ks():
            coeffs = [Fraction(0)] * (m + 1)
            for n in range(m + 1):
                coeffs[m - n] = (Fraction(comb(m, n), comb(n + k, n))
                                 * stirling2(n + k, k) * (-1) ** (m - n))
            lhs = Polynomial(coeffs)
            rhs = Polynomial.zero()
            for n in range(m + 1):
                rhs = rhs + cauchy_hi_poly1(n, k) * stirling2(m, n)
            yield ({"m": m, "k": k}, lhs, rhs)


def _cases_t6(grid: Grid) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            lhs = sum((Fraction(comb(n, m), comb(k + m, m)) * stirling2(k + m, k)
                       * Fraction((-k) ** (n - m)) for m in range(n + 1)), Fraction(0))
            rhs = sum((cauchy_hi2(m, k, CauchyMethod.GF_COEFF) * stirling2(n, m)
                       for m in range(n + 1)), Fraction(0))
            yield ({"n": n, "k": k}, lhs, rhs)


def _cases_t8(grid: Grid) -> Iterator[Case]:
    for m in grid.ns():
        for k in grid.ks():
            lhs = Polynomial.zero()
            for n in range(m + 1):
                lhs = lhs + cauchy_hi_poly2(n, k) * stirling2(m, n)
            rhs = Polynomial.zero()
            shifted = Polynomial((-k, 1))
            for n in range(m + 1):
                rhs = rhs + shifted ** (m - n) * (Fraction(comb(m, n), comb(n + k, n))
                                                  * stirling2(n + k, k))
            yield ({"m": m, "k": k}, lhs, rhs)


def _cases_t9(grid: Grid) -> Iterator[Case]:
    for n in grid.ns():
        if n < 1:
            continue
        for k in grid.ks():
            lhs = cauchy_hi_poly1(n, k) * Fraction((-1) ** n, factorial(n))
            rhs = Polynomial.zero()
            for m in range(1, n + 1):
                rhs = rhs + cauchy_hi_poly2(m, k) * Fraction(comb(n - 1, n - m), factorial(m))
            yield ({"n": n, "k": k}, lhs, rhs)


def _cases_t10(grid: Grid) -> Iterator[Case]:
    for n in grid.ns():
        if n < 1:
            continue
        for k in grid.ks():
            lhs = cauchy_hi_poly2(n, k) * Fraction((-1) ** n, factorial(n))
            rhs = Polynomial.zero()
            for m in range(1, n + 1):
                rhs = rhs + cauchy_hi_poly1(m, k) * Fraction(comb(n - 1, n - m), factorial(m))
            yield ({"n": n, "k": k}, lhs, rhs)


def _cases_l11(grid: Grid) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            first = cauchy_hi_poly1(n, k)
            second = cauchy_hi_poly2(n, k)
            lhs1 = cauchy_hi_poly1(n - 1, k) * n if n >= 1 else Polynomial.zero()
            lhs2 = cauchy_hi_poly2(n - 1, k) * n if n >= 1 else Polynomial.zero()
            yield ({"n": n, "k": k, "form": "first_kind"}, lhs1,
                   first.shift(-1) - first)
            yield ({"n": n, "k": k, "form": "second_kind"}, lhs2,
                   second.shift(1) - second)


def _sign(exponent: int) -> int:
    """(-1)**exponent for any integer exponent, stays in Z."""
    return -1 if exponent % 2 else 1


def _t12_first_display(n: int, k: int, printed_sign: bool) -> Polynomial:
    # sum over l,m of C(l,m)/C(k+l-m,k) S2(k+l-m,k) S1(n,l) sign x^m
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        s1 = stirling1_signed(n, l)
        if s1 == 0:
            continue
        for m in range(l + 1):
            sign = _sign(k - m) if printed_sign else _sign(m)
            coeffs[m] += (Fraction(comb(l, m), comb(k + l - m, k))
                          * stirling2(k + l - m, k) * s1 * sign)
    return Polynomial(coeffs)


def _t12_second_display(n: int, k: int) -> Polynomial:
    result = Polynomial.zero()
    base = Polynomial((-k, 1))
    powers = [Polynomial.one()]
    for _ in range(n):
        powers.append(powers[-1] * base)
    for l in range(n + 1):
        s1 = stirling1_signed(n, l)
        if s1 == 0:
            continue
        for m in range(l + 1):
            result = result + powers[m] * (Fraction(comb(l, m), comb(k + l - m, k))
                                           * stirling2(k + l - m, k) * s1)
    return result


def _cases_t12(grid: Grid, printed_sign: bool = True) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            yield ({"n": n, "k": k, "form": "first_kind"},
                   _t12_first_display(n, k, printed_sign), cauchy_hi_poly1(n, k))
            yield ({"n": n, "k": k, "form": "second_kind"},
                   _t12_second_display(n, k), cauchy_hi_poly2(n, k))


def _cases_t12_corrected(grid: Grid) -> Iterator[Case]:
    return _cases_t12(grid, printed_sign=False)


def _t13_coefficient(n: int, m: int, k: int, alpha: int) -> Fraction:
    return sum((comb(n, l) * stirling1_signed(n - l, m)
                * cauchy_hi_poly2(l, k + alpha).evaluate(alpha)
                for l in range(n - m + 1)), Fraction(0))


def _cases_t13(grid: Grid, printed_index: bool = True) -> Iterator[Case]:
    if grid.n_max < 0:
        return
    order = grid.n_max + 2
    for alpha in grid.alphas():
        h = (expm1_series(order + 1) / t_series(order + 1)) ** alpha
        l = t_series(order)
        for k in grid.ks():
            exp_t = expm1_series(order) + 1
            g = ((t_series(order) * exp_t) / expm1_series(order + 1)) ** k
            f = expm1_series(order)
            matrix = connection_coeffs(g, f, h, l, grid.n_max)
            for n in grid.ns():
                target = cauchy_hi_poly2(n, k)
                resummed = Polynomial.zero()
                for m in range(n + 1):
                    c = _t13_coefficient(n, m, k, alpha)
                    basis = bernoulli_hi_poly(n if printed_index else m, alpha)
                    resummed = resummed + basis * c
                yield ({"alpha": alpha, "k": k, "n": n, "form": "resummation"},
                       resummed, target)
                for m in range(n + 1):
                    yield ({"alpha": alpha, "k": k, "n": n, "m": m,
                            "form": "connection_matrix"},
                           _t13_coefficient(n, m, k, alpha), matrix[n][m])


def _cases_t13_corrected(grid: Grid) -> Iterator[Case]:
    return _cases_t13(grid, printed_index=False)


def _cases_eq6(grid: Grid) -> Iterator[Case]:
    order = grid.n_max + 3
    for n in grid.ns():
        power = log1p_series(order) ** n
        for l in range(order):
            yield ({"n": n, "l": l},
                   power.coefficient(l),
                   Fraction(factorial(n) * stirling1_signed(l, n), factorial(l)))


def _cases_eq7(grid: Grid) -> Iterator[Case]:
    order = grid.n_max + 3
    for n in grid.ns():
        power = expm1_series(order) ** n
        for l in range(order):
            yield ({"n": n, "l": l},
                   power.coefficient(l),
                   Fraction(factorial(n) * stirling2(l, n), factorial(l)))


def _cases_eq19(grid: Grid) -> Iterator[Case]:
    if grid.n_max < 0:
        return
    order = grid.n_max + 1
    x_minus_1 = Polynomial((-1, 1))
    for e in grid.ks():
        gf = (cauchy1_gf(order) ** e) * one_plus_t_pow(x_minus_1, order)
        for j in grid.ns():
            yield ({"e": e, "j": j}, egf_coeff(gf, j), bernoulli_hi_poly(j, j - e + 1))


def _cases_eq28(grid: Grid) -> Iterator[Case]:
    if grid.n_max < 0:
        return
    order = grid.n_max + 1
    for e in grid.ks():
        gf = (cauchy1_gf(order) ** e) * one_plus_t_pow(Polynomial.x(), order)
        for j in grid.ns():
            yield ({"e": e, "j": j}, egf_coeff(gf, j),
                   bernoulli_hi_poly(j, j - e + 1).shift(1))


def _cases_eq52(grid: Grid) -> Iterator[Case]:
    if grid.n_max < 0:
        return
    order = grid.n_max + 2
    for k in grid.ks():
        g = (t_series(order + 1) / one_minus_exp_neg_series(order + 1)) ** k
        f = -one_minus_exp_neg_series(order)
        polys = sheffer_polys(g, f, grid.n_max)
        for n in grid.ns():
            yield ({"k": k, "n": n}, polys[n], cauchy_hi_poly1(n, k))


def _cases_eq53(grid: Grid) -> Iterator[Case]:
    if grid.n_max < 0:
        return
    order = grid.n_max + 2
    for k in grid.ks():
        exp_t = expm1_series(order) + 1
        g = ((t_series(order) * exp_t) / expm1_series(order + 1)) ** k
        f = expm1_series(order)
        polys = sheffer_polys(g, f, grid.n_max)
        for n in grid.ns():
            yield ({"k": k, "n": n}, polys[n], cauchy_hi_poly2(n, k))


def _apply_series_operator(op: PowerSeries, p: Polynomial) -> Polynomial:
    """Evaluate op(d/dx) p(x): the t^j coefficient of op multiplies the j-th derivative."""
    result = Polynomial.zero()
    current = p
    for j in range(op.order):
        if current.is_zero():
            break
        c = op.coeffs[j]
        if c != 0:
            result = result + current * c
        current = current.derivative()
    return result


def _cases_eq58(grid: Grid) -> Iterator[Case]:
    if grid.n_max < 0:
        return
    order = grid.n_max + 1
    for k in grid.ks():
        op = (t_series(order + 1) / one_minus_exp_neg_series(order + 1)) ** k
        for n in grid.ns():
            signed_rising = rising_factorial(n) * (-1) ** n
            yield ({"k": k, "n": n, "form": "operator"},
                   _apply_series_operator(op, cauchy_hi_poly1(n, k)), signed_rising)
            yield ({"k": k, "n": n, "form": "stirling_expansion"},
                   signed_rising,
                   Polynomial([(-1) ** l * stirling1_signed(n, l) for l in range(n + 1)]))


def _eq59_expansion(n: int, k: int, printed_sign: bool) -> Polynomial:
    # sum over l,m of k!/(k+m)! (l)_m S2(k+m,k) S1(n,l) sign x^(l-m)
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        s1 = stirling1_signed(n, l)
        if s1 == 0:
            continue
        for m in range(l + 1):
            sign = (-1) ** (k + l + m) if printed_sign else (-1) ** (l + m)
            coeffs[l - m] += (Fraction(factorial(k), factorial(k + m))
                              * perm(l, m) * stirling2(k + m, k) * s1 * sign)
    return Polynomial(coeffs)


def _eq61_expansion(n: int, k: int) -> Polynomial:
    result = Polynomial.zero()
    base = Polynomial((-k, 1))
    powers = [Polynomial.one()]
    for _ in range(n):
        powers.append(powers[-1] * base)
    for l in range(n + 1):
        s1 = stirling1_signed(n, l)
        if s1 == 0:
            continue
        for m in range(l + 1):
            result = result + powers[l - m] * (Fraction(comb(l, m), comb(m + k, m))
                                               * stirling2(k + m, k) * s1)
    return result


def _cases_eq59_61(grid: Grid, printed_sign: bool = True) -> Iterator[Case]:
    for n in grid.ns():
        for k in grid.ks():
            yield ({"n": n, "k": k, "form": "first_kind"},
                   _eq59_expansion(n, k, printed_sign), cauchy_hi_poly1(n, k))
            yield ({"n": n, "k": k, "form": "second_kind"},
                   _eq61_expansion(n, k), cauchy_hi_poly2(n, k))


def _cases_eq59_61_corrected(grid: Grid) -> Iterator[Case]:
    return _cases_eq59_61(grid, printed_sign=False)


def _cases_polyc(grid: Grid, prose_stirling2: bool = False) -> Iterator[Case]:
    # The defining-integral index is read as n throughout (the printed index
    # m is unbound); the oracle never touches Stirling numbers.
    def second_formula(n, k, z):
        if not prose_stirling2:
            return poly_cauchy_poly2(n, k, z)
        # fallback reading: the prose names second-kind Stirling numbers
        return sum(((-1) ** n * stirling2(n, m)
                    * sum((comb(m, i) * (-z) ** i * Fraction(1, (m - i + 1) ** k)
                           for i in range(m + 1)), Fraction(0))
                    for m in range(n + 1)), Fraction(0))

    for n in grid.ns():
        ff = falling_factorial(n)
        for k in grid.ks():
            yield ({"n": n, "k": k, "form": "numbers_first"},
                   poly_cauchy1(n, k), product_integrate(ff, k))
            yield ({"n": n, "k": k, "form": "numbers_second"},
                   poly_cauchy2(n, k), product_integrate(ff.reflect(), k))
            for z in grid.x_samples:
                yield ({"n": n, "k": k, "z": format_rational(z), "form": "poly_first"},
                       poly_cauchy_poly1(n, k, z), product_integrate(ff.shift(-z), k))
                yield ({"n": n, "k": k, "z": format_rational(z), "form": "poly_second"},
                       second_formula(n, k, z),
                       product_integrate(ff.reflect().shift(-z), k))


def _cases_polyc_prose(grid: Grid) -> Iterator[Case]:
    return _cases_polyc(grid, prose_stirling2=True)


_PRINTED: dict[CheckId, Callable[[Grid], Iterator[Case]]] = {
    CheckId.T1: _cases_t1,
    CheckId.T2: _cases_t2,
    CheckId.T3: _cases_t3,
    CheckId.T4: _cases_t4,
    CheckId.T5: _cases_t5,
    CheckId.T6: _cases_t6,
    CheckId.T7: _cases_t7,
    CheckId.T8: _cases_t8,
    CheckId.T9: _cases_t9,
    CheckId.T10: _cases_t10,
    CheckId.L11: _cases_l11,
    CheckId.T12: _cases_t12,
    CheckId.T13: _cases_t13,
    CheckId.EQ6: _cases_eq6,
    CheckId.EQ7: _cases_eq7,
    CheckId.EQ19: _cases_eq19,
    CheckId.EQ28: _cases_eq28,
    CheckId.EQ52: _cases_eq52,
    CheckId.EQ53: _cases_eq53,
    CheckId.EQ58: _cases_eq58,
    CheckId.EQ59_61: _cases_eq59_61,
    CheckId.POLYC_ORACLE: _cases_polyc,
}

# Corrected readings, registered up front and tried only after the printed
# form fails; each is an evident-typo fix, never a silent repair.
_CORRECTED: dict[CheckId, list[tuple[str, Callable[[Grid], Iterator[Case]]]]] = {
    CheckId.T12: [(TAG_SIGN_FIRST_KIND, _cases_t12_corrected)],
    CheckId.T13: [(TAG_T13_INDEX, _cases_t13_corrected)],
    CheckId.EQ59_61: [(TAG_SIGN_FIRST_KIND, _cases_eq59_61_corrected)],
    CheckId.POLYC_ORACLE: [(TAG_POLYC_PROSE, _cases_polyc_prose)],
}

# Readings applied before anything can run because the printed form is not
# executable (an unbound index); such checks never report a plain pass.
_STRUCTURAL: dict[CheckId, str] = {
    CheckId.POLYC_ORACLE: TAG_POLYC_INDEX,
}


def verify(check_id: CheckId, grid: Grid | None = None) -> TheoremReport:
    """Run one check over the grid and report the outcome."""
    if not isinstance(check_id, CheckId):
        raise ValueError(f"unknown check id: {check_id!r}")
    grid = DEFAULT_GRID if grid is None else grid
    checked, failures = _execute(_PRINTED[check_id](grid))
    structural = _STRUCTURAL.get(check_id)
    if not failures:
        if structural is not None:
            return TheoremReport(check_id, grid, PASS_WITH_CORRECTION, checked,
                                 corrected_reading=structural)
        return TheoremReport(check_id, grid, PASS, checked)
    for tag, corrected in _CORRECTED.get(check_id, []):
        checked2, failures2 = _execute(corrected(grid))
        if not failures2:
            reading = tag if structural is None else f"{structural}; {tag}"
            return TheoremReport(check_id, grid, PASS_WITH_CORRECTION, checked2,
                                 tuple(failures), corrected_reading=reading)
    return TheoremReport(check_id, grid, FAIL, checked, tuple(failures))


def run_suite(grid: Grid | None = None,
              checks: Iterable[CheckId] | None = None) -> list[TheoremReport]:
    """Run the selected checks (all of them by default) in declaration order."""
    grid = DEFAULT_GRID if grid is None else grid
    selected = set(CheckId) if checks is None else set(checks)
    return [verify(cid, grid) for cid in CheckId if cid in selected]


def suite_exit_code(reports: Iterable[TheoremReport]) -> int:
    return 1 if any(r.status == FAIL for r in reports) else 0


def reports_to_json(reports: Iterable[TheoremReport]) -> str:
    return json.dumps([r.to_json_obj() for r in reports], separators=(",", ":"))


def reports_to_text(reports: Iterable[TheoremReport]) -> str:
    lines = []
    reports = list(reports)
    for r in reports:
        status = r.status + (" (vacuous)" if r.vacuous else "")
        lines.append(f"{r.id.value:<13} {status:<28} cases={r.cases_checked}")
        if r.corrected_reading is not None:
            lines.append(f"    corrected reading: {r.corrected_reading}")
        for ce in r.counterexamples:
            params = ", ".join(f"{key}={val}" for key, val in ce.params.items())
            lines.append(f"    printed form fails at {params}: {ce.lhs} != {ce.rhs}")
    failed = [r.id.value for r in reports if r.status == FAIL]
    lines.append("result: " + ("FAIL " + ",".join(failed) if failed else "ok"))
    return "\n".join(lines)
