"""
Bounded search for values of a binary form.

Responsibility: Exhaustive representability search and the 2-adic obstruction
for the quartic-plane form 4(n1^2 + n1*n2 - n2^2)
"""

from __future__ import annotations

import logging
from math import isqrt
from typing import Iterator, Optional

from ..exceptions import LatticeError
from .gram import GramLattice

logger = logging.getLogger(__name__)


def _centered(bound: int) -> Iterator[int]:
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def represents(
    lat: GramLattice,
    c: int,
    m_bound: int,
    n_bound: int,
) -> Optional[tuple[int, int, int]]:
    """
    First (n1, n2, m) with Q(n1, n2) = c * m^2, or None.

    Searches |n1|, |n2| <= n_bound and 1 <= m <= m_bound with (n1, n2) != (0, 0).
    Coordinates run 0, 1, -1, 2, -2, ... with n1 outermost; for each vector
    the smallest admissible m is taken.
    """
    if lat.rank != 2:
        raise LatticeError(f"represents needs a rank-2 lattice, got rank {lat.rank}")
    if m_bound < 1 or n_bound < 1:
        raise ValueError(f"bounds must be positive, got m_bound={m_bound}, n_bound={n_bound}")
    (g11, g12), (_, g22) = lat.gram
    for n1 in _centered(n_bound):
        for n2 in _centered(n_bound):
            if n1 == 0 and n2 == 0:
                continue
            value = g11 * n1 * n1 + 2 * g12 * n1 * n2 + g22 * n2 * n2
            if c == 0:
                if value == 0:
                    return (n1, n2, 1)
                continue
            if value % c:
                continue
            ratio = value // c
            if ratio <= 0:
                continue
            m = isqrt(ratio)
            if m * m == ratio and m <= m_bound:
                return (n1, n2, m)
    logger.debug(f"{c} * m^2 not represented within bounds m<={m_bound}, |n|<={n_bound}")
    return None


def two_adic_valuation(c: int) -> int:
    if c == 0:
        raise ValueError("0 has infinite 2-adic valuation")
    c = abs(c)
    return (c & -c).bit_length() - 1


def two_adic_obstruction(c: int) -> bool:
    """
    True if 4(n1^2 + n1*n2 - n2^2) = c * m^2 has no nonzero solution for
    2-adic reasons.

    2 is inert in Q(sqrt 5), so n1^2 + n1*n2 - n2^2 has even 2-adic valuation;
    an odd valuation of c is then impossible.
    """
    if c == 0:
        return False
    return two_adic_valuation(c) % 2 == 1
