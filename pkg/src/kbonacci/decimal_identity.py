"""Reciprocals whose decimal digits are generated by k-bonacci numbers.

For every order k, summing F_n / 10^(n+1) over all n gives exactly
1 / D_k where D_k is the k-digit integer written as k-1 eights followed
by a nine.  Equivalently D_k = (8*10^k + 1) / 9.  The k = 2 case is the
familiar fact that 1/89 opens with the Fibonacci numbers 0, 1, 1, 2, 3,
5, 8 before carries start to interfere.

Verification here is exact rational equality (the eta = 10 closed form
of the generating series against 1/D_k).  The digit-level operations are
a second, independent route used for display and cross-checking: long
division on one side, exact truncated summation on the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequence import validate_order
from .series import SeriesPoint, closed_form, converge_until

__all__ = [
    "RepunitDenominator",
    "repunit_denominator",
    "verify_decimal_identity",
    "reciprocal_digits",
    "digit_overlap_check",
    "identity_line",
]


@dataclass(frozen=True)
class RepunitDenominator:
    """The denominator D_k: k-1 eights then a nine, as an integer."""

    k: int
    value: int

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def repunit_denominator(k: int) -> RepunitDenominator:
    """D_k built two independent ways, which must agree.

    Route one writes the digits directly; route two evaluates
    (8*10^k + 1) / 9, checking the division is exact.
    """
    validate_order(k)
    from_digits = int("8" * (k - 1) + "9")
    nine_d, rem = divmod(8 * 10**k + 1, 9)
    assert rem == 0, f"8*10^{k}+1 not divisible by 9"
    assert from_digits == nine_d, (
        f"digit construction {from_digits} != algebraic value {nine_d}"
    )
    return RepunitDenominator(k=k, value=from_digits)


def verify_decimal_identity(k: int) -> bool:
    """True iff closed_form(k, 10) / 10 equals 1/D_k exactly."""
    d = repunit_denominator(k).value
    lhs = closed_form(SeriesPoint(k=k, eta=Fraction(10))) / 10
    return lhs == Fraction(1, d)


def reciprocal_digits(den: int, m: int) -> str:
    """First m decimal digits of 1/den after the point, by long division."""
    if den < 1:
        raise ValueError(f"denominator must be >= 1, got {den}")
    if m < 1:
        raise ValueError(f"digit count must be >= 1, got {m}")
    rem = 1 % den
    out = []
    for _ in range(m):
        rem *= 10
        digit, rem = divmod(rem, den)
        out.append(chr(ord("0") + digit))
    return "".join(out)


def digit_overlap_check(k: int, m: int) -> bool:
    """Confirm the identity digit-by-digit, independently of long division.

    Sums F_n / 10^(n+1) exactly out to a truncation point whose tail is
    provably too small to disturb the first m digits, truncates, and
    compares with reciprocal_digits(D_k, m).

    The tail threshold: 10^m / D_k is never an integer (D_k ends in 9,
    so it is coprime to 10) and its fractional part is at least 1/D_k.
    Keeping the omitted tail below half of 10^(-m)/D_k therefore pins
    floor(sum * 10^m) to floor(10^m / D_k).
    """
    if m < 1:
        raise ValueError(f"digit count must be >= 1, got {m}")
    d = repunit_denominator(k).value
    # The series module sums F_n/10^n; our sum is that over 10, so give
    # it a threshold 10x the one derived above (and halved for margin).
    report = converge_until(
        SeriesPoint(k=k, eta=Fraction(10)), Fraction(5, d * 10**m)
    )
    summed = report.partial / 10
    scaled = summed.numerator * 10**m // summed.denominator
    return f"{scaled:0{m}d}" == reciprocal_digits(d, m)


def identity_line(k: int, passed: bool) -> str:
    """Display line for one order's identity check."""
    d = repunit_denominator(k).value
    verdict = "PASS" if passed else "FAIL"
    return f"1/{d} == sum F_n^(k)/10^(n+1): {verdict}"
