"""
Formatting helpers for exact values.

Exact cells are rationals ``p/q`` or quadratic numbers ``a+b*sqrt(d)``;
decimals come only from ``to_decimal_string`` and are labelled approximate by
the callers.

Responsibility: Exact-value text forms, decimal companions, integer-list flags
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import mpmath

from ..arith import QuadNum
from ..config import settings

ExactValue = Union[int, Fraction, QuadNum]


def format_exact(value: ExactValue) -> str:
    """Compact exact text form, e.g. ``4/3`` or ``-3/2+5/6*sqrt(5)``"""
    if isinstance(value, QuadNum):
        return str(value).replace(" ", "")
    return str(value)


def to_decimal_string(value: ExactValue, digits: int | None = None) -> str:
    """Decimal approximation with ``digits`` significant digits (settings default)"""
    digits = digits or settings.compute.decimal_digits
    if isinstance(value, QuadNum):
        return value.to_decimal(digits)
    value = Fraction(value)
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits)


def parse_range_or_list(text: str) -> list[int]:
    """
    Parse ``"a..b"`` (inclusive) or a comma-separated list of integers.

    Raises:
        ValueError: on malformed input or an empty range
    """
    text = text.strip()
    if ".." in text:
        low_text, high_text = text.split("..", 1)
        low, high = int(low_text), int(high_text)
        if high < low:
            raise ValueError(f"empty range {text!r}")
        return list(range(low, high + 1))
    values = [int(part) for part in text.split(",") if part.strip()]
    if not values:
        raise ValueError(f"no integers in {text!r}")
    return values
