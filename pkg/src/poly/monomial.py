"""
Monomials and monomial orders.

Polynomials key their terms by plain exponent tuples; ``Monomial`` wraps a
tuple for public APIs that take monomials directly (monomial ideals, order
comparisons). Sort keys come from ``sympy.polys.orderings``.

Responsibility: Exponent vectors, order comparison, arity and overflow checks
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from sympy.polys.orderings import grevlex, lex

from ..config import settings
from ..exceptions import ArityMismatchError, ExponentOverflowError

Exponents = tuple[int, ...]


def check_exponents(exponents: Iterable[int]) -> Exponents:
    """Validate a 32-bit nonnegative exponent vector and return it as a tuple"""
    result = tuple(exponents)
    limit = settings.compute.max_exponent
    for value in result:
        if value < 0:
            raise ValueError(f"negative exponent in {result}")
        if value > limit:
            raise ExponentOverflowError(f"exponent {value} exceeds {limit}")
    return result


@dataclass(frozen=True, slots=True)
class Monomial:
    """Exponent vector with cached total degree"""

    exponents: Exponents
    total_degree: int = field(init=False)

    def __post_init__(self) -> None:
        exponents = check_exponents(self.exponents)
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "total_degree", sum(exponents))

    @classmethod
    def of(cls, *exponents: int) -> "Monomial":
        return cls(tuple(exponents))

    def __len__(self) -> int:
        return len(self.exponents)

    def scaled(self, q: int) -> "Monomial":
        """Exponents multiplied by q (the Frobenius image of the monomial)"""
        return Monomial(tuple(a * q for a in self.exponents))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))


class MonomialOrder(str, Enum):
    """Supported monomial orders"""
    GREVLEX = "grevlex"
    LEX = "lex"

    def sort_key(self, exponents: Exponents):
        """Ascending key: larger monomials give larger keys"""
        if self is MonomialOrder.GREVLEX:
            return grevlex(exponents)
        return lex(exponents)

    def heap_key(self, exponents: Exponents):
        """Key whose minimum is the largest monomial (for ``heapq``)"""
        if self is MonomialOrder.GREVLEX:
            return (-sum(exponents), exponents[::-1])
        return tuple(-a for a in exponents)


def _check_arity(m1: Sequence[int], m2: Sequence[int]) -> None:
    if len(m1) != len(m2):
        raise ArityMismatchError(f"monomial arity mismatch: {len(m1)} vs {len(m2)}")


def grevlex_cmp(m1: Monomial, m2: Monomial) -> int:
    """
    Compare two monomials in graded reverse lexicographic order.

    Total degree decides first; on a tie the monomial whose last nonzero
    entry of (m1 - m2) is negative is larger.

    Returns:
        -1, 0 or 1 as m1 is smaller than, equal to, or larger than m2
    """
    _check_arity(m1.exponents, m2.exponents)
    if m1.total_degree != m2.total_degree:
        return 1 if m1.total_degree > m2.total_degree else -1
    for a, b in zip(reversed(m1.exponents), reversed(m2.exponents)):
        if a != b:
            return 1 if a < b else -1
    return 0
