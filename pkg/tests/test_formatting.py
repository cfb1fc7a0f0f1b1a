from fractions import Fraction

import pytest

from src.arith import QuadNum
from src.utils.formatting import format_exact, parse_range_or_list, to_decimal_string


# MARK: - Exact text


def test_format_exact_rationals_and_integers() -> None:
    assert format_exact(Fraction(4, 3)) == "4/3"
    assert format_exact(Fraction(-2, 1)) == "-2"
    assert format_exact(7) == "7"


def test_format_exact_quadratic_has_no_spaces() -> None:
    limit = QuadNum(Fraction(-3, 2), Fraction(5, 6), 5)

    assert format_exact(limit) == "-3/2+5/6*sqrt(5)"
    assert format_exact(QuadNum(Fraction(1, 2), Fraction(-1, 2), 5)) == "1/2-1/2*sqrt(5)"


def test_format_exact_quadratic_with_zero_irrational_part() -> None:
    assert format_exact(QuadNum.rational(Fraction(3, 2))) == "3/2"


# MARK: - Decimals


def test_to_decimal_string_rational() -> None:
    assert to_decimal_string(Fraction(4, 3), 10) == "1.333333333"
    assert to_decimal_string(Fraction(1, 4), 5) == "0.25"


def test_to_decimal_string_golden_ratio() -> None:
    phi = QuadNum(Fraction(1, 2), Fraction(1, 2), 5)

    assert to_decimal_string(phi, 20) == "1.6180339887498948482"


def test_to_decimal_string_uses_requested_precision() -> None:
    limit = QuadNum(Fraction(-3, 2), Fraction(5, 6), 5)

    short = to_decimal_string(limit, 8)
    long = to_decimal_string(limit, 30)

    assert long.startswith(short[:-1])
    assert len(long) > len(short)


# MARK: - Integer lists


def test_parse_range_is_inclusive() -> None:
    assert parse_range_or_list("2..5") == [2, 3, 4, 5]
    assert parse_range_or_list(" 7..7 ") == [7]


def test_parse_comma_list_keeps_order() -> None:
    assert parse_range_or_list("16,64,256") == [16, 64, 256]
    assert parse_range_or_list("3,1,") == [3, 1]


@pytest.mark.parametrize("text", ["5..2", "", ",", "a..b", "1,x"])
def test_parse_range_or_list_rejects_bad_input(text: str) -> None:
    with pytest.raises(ValueError):
        parse_range_or_list(text)
