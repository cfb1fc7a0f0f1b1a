"""
Exact arithmetic in real quadratic fields Q(sqrt d).

Rationals are ``fractions.Fraction`` (exposed as ``BigRational``). A ``QuadNum``
is a + b*sqrt(d) with a, b rational and d a squarefree integer >= 2. Sign,
comparison and floor are decided with integer arithmetic only.

Responsibility: Rational and quadratic-irrational value types
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath
from sympy import factorint

from ..exceptions import HKLabError, RadicandMismatchError

BigRational = Fraction

# Radicand carried by rational values that were not produced inside a field
DEFAULT_RADICAND = 5

RationalLike = Union[int, Fraction]


class NegativeDiscriminantError(HKLabError, ValueError):
    """Raised when a quadratic has no real roots"""


@lru_cache(maxsize=1024)
def squarefree_decomposition(n: int) -> tuple[int, int]:
    """
    Split a positive integer as n = s^2 * k with k squarefree.

    Returns:
        (s, k)
    """
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    s, k = 1, 1
    for prime, exponent in factorint(n).items():
        s *= prime ** (exponent // 2)
        if exponent % 2:
            k *= prime
    return s, k


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True, slots=True)
class QuadNum:
    """
    Immutable element a + b*sqrt(d) of a real quadratic field.

    The radicand is reduced to its squarefree part on construction and the
    square factor is absorbed into ``b``. A perfect-square radicand folds the
    whole value into ``a``. When ``b == 0`` the radicand is kept but plays no
    role in equality, hashing or arithmetic with other fields.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = DEFAULT_RADICAND

    def __post_init__(self) -> None:
        a = _as_fraction(self.a)
        b = _as_fraction(self.b)
        d = self.d
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"radicand must be a positive integer, got {d!r}")
        s, k = squarefree_decomposition(d)
        if k == 1:
            a, b, k = a + b * s, Fraction(0), DEFAULT_RADICAND
        else:
            b = b * s
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", k)

    # MARK: - Construction

    @classmethod
    def rational(cls, value: RationalLike, d: int = DEFAULT_RADICAND) -> "QuadNum":
        """Embed a rational into Q(sqrt d)"""
        return cls(_as_fraction(value), Fraction(0), d)

    @classmethod
    def sqrt(cls, value: RationalLike) -> "QuadNum":
        """Exact square root of a nonnegative rational"""
        value = _as_fraction(value)
        if value < 0:
            raise NegativeDiscriminantError(f"square root of negative rational {value}")
        if value == 0:
            return cls.rational(0)
        # sqrt(N/D) = sqrt(N*D)/D
        return cls(Fraction(0), Fraction(1, value.denominator), value.numerator * value.denominator)

    def _coerce(self, other: object) -> "QuadNum":
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum.rational(other, self.d)
        return NotImplemented  # type: ignore[return-value]

    def _common_radicand(self, other: "QuadNum") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or other.d == self.d:
            return self.d
        raise RadicandMismatchError(
            f"cannot combine elements of Q(sqrt {self.d}) and Q(sqrt {other.d})"
        )

    # MARK: - Field operations

    def __add__(self, other: object) -> "QuadNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_radicand(other)
        return QuadNum(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other: object) -> "QuadNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "QuadNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: object) -> "QuadNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_radicand(other)
        return QuadNum(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2"""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadNum division by zero")
        return QuadNum(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other: object) -> "QuadNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._common_radicand(other)
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "QuadNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "QuadNum":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadNum.rational(1, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # MARK: - Equality and ordering

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadNum):
            return NotImplemented
        if self.b == 0 or other.b == 0:
            return self.b == other.b and self.a == other.a
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other: object) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented  # type: ignore[return-value]
        return quad_sign(self - other)

    def __lt__(self, other: object) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other: object) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other: object) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other: object) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __abs__(self) -> "QuadNum":
        return -self if quad_sign(self) < 0 else self

    # MARK: - Display

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"QuadNum({self})"

    def to_decimal(self, digits: int = 50) -> str:
        """Decimal approximation with ``digits`` significant digits"""
        with mpmath.workdps(digits + 10):
            value = mpmath.mpf(self.a.numerator) / self.a.denominator
            if self.b != 0:
                value += mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.d)
            return mpmath.nstr(value, digits)


_QUAD_PATTERN = re.compile(
    r"^\s*(?P<a>-?\d+(?:/\d+)?)"
    r"(?:\s*(?P<op>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_quadnum(text: str) -> QuadNum:
    """Parse the display format ``a + b*sqrt(d)`` (or a bare rational)"""
    match = _QUAD_PATTERN.match(text)
    if not match:
        raise ValueError(f"not a quadratic number: {text!r}")
    a = Fraction(match.group("a"))
    if match.group("b") is None:
        return QuadNum.rational(a)
    b = Fraction(match.group("b"))
    if match.group("op") == "-":
        b = -b
    return QuadNum(a, b, int(match.group("d")))


def quad_sign(x: QuadNum) -> int:
    """
    Exact sign of a + b*sqrt(d).

    When a and b have opposite signs the larger of a^2 and b^2*d wins.
    """
    sa, sb = _sign(x.a), _sign(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs = x.a * x.a
    rhs = x.b * x.b * x.d
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


def quad_floor(x: QuadNum) -> int:
    """
    Greatest integer f with f <= x.

    b*sqrt(d) is bracketed by the integer square root of b^2*d written over a
    common denominator; the candidate is then corrected by exact sign tests.
    """
    if x.b == 0:
        return math.floor(x.a)
    radicand = x.b * x.b * x.d
    den = radicand.denominator
    root = math.isqrt(radicand.numerator * den)  # sqrt(radicand) ~ root / den
    approx = x.a + (1 if x.b > 0 else -1) * Fraction(root, den)
    f = math.floor(approx)
    while quad_sign(x - f) < 0:
        f -= 1
    while quad_sign(x - (f + 1)) >= 0:
        f += 1
    return f


def quad_ceil(x: QuadNum) -> int:
    """Least integer c with c >= x"""
    return -quad_floor(-x)


def solve_quadratic(
    A: RationalLike,
    B: RationalLike,
    C: RationalLike,
) -> tuple[QuadNum, QuadNum]:
    """
    Exact real roots of A*x^2 + B*x + C = 0.

    Returns:
        (x_minus, x_plus) with x_minus <= x_plus, both in Q(sqrt k) where k is
        the squarefree part of the discriminant (rational roots have b = 0)

    Raises:
        ValueError: if A == 0
        NegativeDiscriminantError: if B^2 - 4AC < 0
    """
    A, B, C = _as_fraction(A), _as_fraction(B), _as_fraction(C)
    if A == 0:
        raise ValueError("leading coefficient A must be nonzero")
    disc = B * B - 4 * A * C
    if disc < 0:
        raise NegativeDiscriminantError(f"discriminant {disc} is negative")
    root = QuadNum.sqrt(disc)
    first = (QuadNum.rational(-B, root.d) - root) / (2 * A)
    second = (QuadNum.rational(-B, root.d) + root) / (2 * A)
    if quad_sign(second - first) < 0:
        first, second = second, first
    return first, second
