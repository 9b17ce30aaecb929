"""Exact rational arithmetic and decimal-string rendering.

``Rational`` is the standard library's ``fractions.Fraction``, which keeps
values normalized exactly as this package requires: denominator >= 1,
gcd(|num|, den) == 1, zero as 0/1.  The helpers here add the pieces the
rest of the package needs on top of that: named operations, strict "p/q"
parsing for command-line input, and reproducible truncating decimal
rendering.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_pow",
    "rat_cmp",
    "parse_rational",
    "format_ratio",
    "to_decimal_string",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rat_add(a: Rational, b: Rational) -> Rational:
    return a + b


def rat_sub(a: Rational, b: Rational) -> Rational:
    return a - b


def rat_mul(a: Rational, b: Rational) -> Rational:
    return a * b


def rat_div(a: Rational, b: Rational) -> Rational:
    """Exact quotient; division by zero raises ZeroDivisionError."""
    return a / b


def rat_pow(a: Rational, e: int) -> Rational:
    """a**e for integer e >= 0 (binary exponentiation; 0**0 == 1)."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return a ** e


def rat_cmp(a: Rational, b: Rational) -> int:
    """-1, 0, or +1 as a <, ==, or > b."""
    if a < b:
        return -1
    return 1 if a > b else 0


def parse_rational(text: str) -> Rational:
    """Parse an exact "p/q" or integer string.

    Rejects anything else -- in particular decimal floats -- so exactness
    is preserved end to end.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"expected an integer or p/q fraction, got {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(s)


def format_ratio(value: Rational) -> str:
    """Canonical "p/q" form, always with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def to_decimal_string(value: Rational, digits: int) -> str:
    """Decimal rendering with exactly ``digits`` fraction digits.

    Truncates toward zero rather than rounding, so the digit stream of a
    value is a prefix of any longer rendering of it.
    """
    if digits < 1:
        raise ValueError(f"digit count must be >= 1, got {digits}")
    sign = "-" if value < 0 else ""
    scaled = abs(value.numerator) * 10 ** digits // value.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
