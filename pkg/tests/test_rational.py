from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kbonacci.rational import (
    format_ratio,
    parse_rational,
    rat_add,
    rat_cmp,
    rat_div,
    rat_mul,
    rat_pow,
    rat_sub,
    to_decimal_string,
)

rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=999
)
nonzero_rationals = rationals.filter(lambda f: f != 0)


class TestOperations:
    def test_add_example(self):
        assert rat_add(Fraction(1, 10), Fraction(1, 100)) == Fraction(11, 100)

    def test_mul_inverse_pair(self):
        assert rat_mul(Fraction(10, 89), Fraction(89, 10)) == 1

    def test_sub(self):
        assert rat_sub(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)

    def test_div(self):
        assert rat_div(Fraction(3, 4), Fraction(3, 2)) == Fraction(1, 2)

    def test_div_by_zero_is_arithmetic_error(self):
        with pytest.raises(ArithmeticError):
            rat_div(Fraction(1), Fraction(0))

    def test_construction_normalizes(self):
        assert Fraction(90, 801) == Fraction(10, 89)

    def test_pow_examples(self):
        assert rat_pow(Fraction(1, 10), 3) == Fraction(1, 1000)
        assert rat_pow(Fraction(10), 4) == 10000
        assert rat_pow(Fraction(3, 2), 2) == Fraction(9, 4)
        assert rat_pow(Fraction(0), 0) == 1

    def test_pow_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            rat_pow(Fraction(2), -1)

    def test_cmp(self):
        assert rat_cmp(Fraction(2), Fraction(10, 89)) == 1
        assert rat_cmp(Fraction(10, 89), Fraction(10, 89)) == 0
        assert rat_cmp(Fraction(1, 889), Fraction(1, 89)) == -1


class TestNormalizationProperties:
    @given(num=st.integers(-10**6, 10**6), den=st.integers(1, 10**6))
    def test_canonical_form(self, num, den):
        from math import gcd

        f = Fraction(num, den)
        assert f.denominator >= 1
        assert gcd(abs(f.numerator), f.denominator) == 1
        if f == 0:
            assert (f.numerator, f.denominator) == (0, 1)

    @given(rationals)
    def test_renormalizing_is_idempotent(self, f):
        again = Fraction(f.numerator, f.denominator)
        assert (again.numerator, again.denominator) == (f.numerator, f.denominator)


class TestFieldAxioms:
    @given(rationals, rationals)
    def test_add_commutes(self, a, b):
        assert rat_add(a, b) == rat_add(b, a)

    @given(rationals, rationals)
    def test_mul_commutes(self, a, b):
        assert rat_mul(a, b) == rat_mul(b, a)

    @given(rationals, rationals, rationals)
    def test_add_associates(self, a, b, c):
        assert rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c))

    @given(rationals, rationals, rationals)
    def test_mul_associates(self, a, b, c):
        assert rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c))

    @given(rationals, rationals, rationals)
    def test_mul_distributes_over_add(self, a, b, c):
        assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))

    @given(nonzero_rationals)
    def test_mul_inverse(self, a):
        assert rat_mul(a, rat_div(Fraction(1), a)) == 1

    @given(rationals)
    def test_additive_inverse(self, a):
        assert rat_add(a, rat_sub(Fraction(0), a)) == 0


class TestParsing:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("10", Fraction(10)),
            ("5/2", Fraction(5, 2)),
            ("-7/2", Fraction(-7, 2)),
            ("+3", Fraction(3)),
            (" 4/6 ", Fraction(2, 3)),
            ("0", Fraction(0)),
        ],
    )
    def test_accepts_exact_forms(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize(
        "text", ["2.5", "1e3", "", "a/b", "1/ 2", "--3", "1/0", "3/00", "1/2/3"]
    )
    def test_rejects_everything_else(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    @given(rationals)
    def test_format_parse_round_trip(self, f):
        assert parse_rational(format_ratio(f)) == f

    def test_format_always_has_denominator(self):
        assert format_ratio(Fraction(10)) == "10/1"
        assert format_ratio(Fraction(-3, 7)) == "-3/7"


class TestDecimalRendering:
    def test_truncates_not_rounds(self):
        assert to_decimal_string(Fraction(2, 3), 4) == "0.6666"
        assert to_decimal_string(Fraction(1, 89), 10) == "0.0112359550"

    def test_negative_values(self):
        assert to_decimal_string(Fraction(-1, 6), 6) == "-0.166666"

    def test_integer_values(self):
        assert to_decimal_string(Fraction(5), 3) == "5.000"

    def test_digit_count_enforced(self):
        with pytest.raises(ValueError):
            to_decimal_string(Fraction(1, 3), 0)

    def test_prefix_stability(self):
        short = to_decimal_string(Fraction(1, 7), 8)
        long = to_decimal_string(Fraction(1, 7), 20)
        assert long.startswith(short)

    @given(rationals, st.integers(1, 30))
    def test_round_trip_error_below_one_ulp(self, f, d):
        rendered = to_decimal_string(f, d)
        whole, frac = rendered.lstrip("-").split(".")
        reread = Fraction(int(whole) * 10**d + int(frac), 10**d)
        if rendered.startswith("-"):
            reread = -reread
        assert abs(reread - f) < Fraction(1, 10**d)
