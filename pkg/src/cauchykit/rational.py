"""Exact rational scalars: canonical construction, parsing and text form.

The whole package computes over ``fractions.Fraction``, which already keeps
values in the canonical form we rely on everywhere: reduced terms, positive
denominator, zero stored as 0/1.  Equality of results is therefore plain
structural equality.  This module pins down the constructor contract and the
text form used by the CLI ("-19/30", "3").
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def rational(numerator: int, denominator: int = 1) -> Fraction:
    """Canonical rational from an integer pair; the sign lives on the numerator."""
    if denominator == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form.

    Accepted: an optional leading "-", a decimal numerator, and optionally
    "/" followed by a positive decimal denominator.  Anything else (floats,
    exponents, signed denominators) is rejected.
    """
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Render canonically: "numerator" or "numerator/denominator" (denominator > 1 only)."""
    return str(Fraction(value))
