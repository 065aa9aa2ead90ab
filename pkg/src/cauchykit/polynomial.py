"""Dense univariate polynomials over exact rationals.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial stores an empty tuple.  All operations are pure and exact, and
instances are immutable, so values can be shared freely between threads.

Besides ring arithmetic the module provides the factorial polynomials

    falling_factorial(n) = x(x-1)...(x-n+1)
    rising_factorial(n)  = x(x+1)...(x+n-1)

whose monomial coefficients are the signed and unsigned Stirling numbers of
the first kind, and exact Lagrange interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class Polynomial:
    """Immutable dense polynomial with ``Fraction`` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Fraction:
        """Coefficient of x**exponent (zero beyond the stored degree)."""
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    @property
    def constant(self) -> Fraction:
        return self.coefficient(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar or by a nonzero constant polynomial."""
        if isinstance(other, Polynomial):
            if other.degree > 0:
                raise ValueError("polynomial division only by a nonzero constant")
            other = other.constant
        other = _as_fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self * (Fraction(1) / other)

    def __rtruediv__(self, other):
        if self.degree > 0:
            raise ValueError("polynomial division only by a nonzero constant")
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return Polynomial((_as_fraction(other) / self.constant,))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and substitution -----------------------------------------

    def evaluate(self, point: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def shift(self, offset: Scalar) -> "Polynomial":
        """p(x + offset), expanded exactly via binomial rows."""
        offset = _as_fraction(offset)
        if offset == 0 or self.is_zero():
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += c * comb(i, j) * power
                power *= offset
        return Polynomial(out)

    def reflect(self) -> "Polynomial":
        """p(-x): sign flip on odd powers."""
        return Polynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * i for i, c in enumerate(self.coeffs) if i >= 1))

    def antiderivative(self) -> "Polynomial":
        """The antiderivative P with P' = p and P(0) = 0."""
        return Polynomial((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
                if c < 0:
                    term = "-" + term
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    return NotImplemented


def falling_factorial(n: int) -> Polynomial:
    """x(x-1)...(x-n+1); the coefficient of x^l is the signed Stirling number."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = Polynomial.one()
    for i in range(n):
        result = result * Polynomial((-i, 1))
    return result


def rising_factorial(n: int) -> Polynomial:
    """x(x+1)...(x+n-1); the coefficient of x^m is the unsigned Stirling number."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = Polynomial.one()
    for i in range(n):
        result = result * Polynomial((i, 1))
    return result


def interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> Polynomial:
    """Exact Lagrange interpolation through distinct sample points."""
    xs = [_as_fraction(p[0]) for p in points]
    ys = [_as_fraction(p[1]) for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Polynomial.zero()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial.one()
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Polynomial((-xj, 1))
            denom *= xi - xj
        result = result + basis * (yi / denom)
    return result
