"""
Graded Betti shifts and the closed-form HK contributions they give.

Responsibility: BettiTable, the alternating cube sums of punctured and finite
resolutions, and the parameter-ideal formula
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Mapping, Sequence

from ..exceptions import MalformedBettiTableError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """
    Shifts beta_ij of a graded complex F_i = sum_j R(-beta_ij).

    ``levels[i]`` holds the shifts of F_i; levels are contiguous from 0.
    """

    levels: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        levels = tuple(tuple(level) for level in self.levels)
        for i, level in enumerate(levels):
            for shift in level:
                if not isinstance(shift, int) or isinstance(shift, bool) or shift < 0:
                    raise MalformedBettiTableError(f"level {i}: shift {shift!r} is not a nonnegative integer")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def from_rows(cls, rows: Sequence[tuple[int, Sequence[int]]]) -> "BettiTable":
        """Build from (index, shifts) pairs in any order"""
        indices = [i for i, _ in rows]
        if len(set(indices)) != len(indices):
            raise MalformedBettiTableError(f"repeated homological index in {sorted(indices)}")
        if sorted(indices) != list(range(len(indices))):
            raise MalformedBettiTableError(f"indices {sorted(indices)} are not contiguous from 0")
        by_index = dict(rows)
        return cls(tuple(tuple(by_index[i]) for i in range(len(indices))))

    @classmethod
    def from_mapping(cls, payload: Mapping[str, Sequence[int]]) -> "BettiTable":
        """JSON form ``{"0": [...], "1": [...]}``"""
        try:
            rows = [(int(k), list(v)) for k, v in payload.items()]
        except (TypeError, ValueError) as exc:
            raise MalformedBettiTableError(f"bad Betti table {payload!r}: {exc}") from exc
        return cls.from_rows(rows)

    @classmethod
    def koszul(cls, degrees: Sequence[int]) -> "BettiTable":
        """Koszul complex on forms of the given degrees"""
        if any(d <= 0 for d in degrees):
            raise MalformedBettiTableError(f"Koszul degrees must be positive, got {list(degrees)}")
        return cls(tuple(
            tuple(sum(subset) for subset in combinations(degrees, i))
            for i in range(len(degrees) + 1)
        ))

    @classmethod
    def empty(cls, top: int) -> "BettiTable":
        """Levels 0..top, all empty (the zero module)"""
        return cls(tuple(() for _ in range(top + 1)))

    @property
    def top(self) -> int:
        return len(self.levels) - 1


def _alternating_cubes(d: int, table: BettiTable, top: int) -> int:
    return sum(
        (-1) ** (d + 1 - i) * sum(beta ** (d + 1) for beta in table.levels[i])
        for i in range(top + 1)
    )


def betti_term(d: int, Hd: int, table: BettiTable) -> Fraction:
    """
    (H^d/(d+1)!) * sum_{i=0..d} (-1)^(d+1-i) sum_j beta_ij^(d+1).

    Levels missing from a short table count as empty.

    Raises:
        MalformedBettiTableError: if the table has a level above d
    """
    if table.top > d:
        raise MalformedBettiTableError(f"punctured table has level {table.top} > d = {d}")
    padded = BettiTable(table.levels + tuple(() for _ in range(d - table.top)))
    return Fraction(Hd, factorial(d + 1)) * _alternating_cubes(d, padded, d)


def finite_pd_hk(d: int, Hd: int, table: BettiTable) -> Fraction:
    """
    HK multiplicity of a module of finite projective dimension from its full
    resolution, levels 0..d+1.

    Raises:
        MalformedBettiTableError: unless the table has exactly d + 2 levels
    """
    if table.top != d + 1:
        raise MalformedBettiTableError(f"expected levels 0..{d + 1}, got 0..{table.top}")
    return Fraction(Hd, factorial(d + 1)) * _alternating_cubes(d, table, d + 1)


def parameter_hk(H2: int, d1: int, d2: int, d3: int) -> Fraction:
    """HK multiplicity H^2 d1 d2 d3 of a homogeneous parameter ideal"""
    if min(d1, d2, d3) <= 0:
        raise ValueError(f"degrees must be positive, got {(d1, d2, d3)}")
    return Fraction(H2 * d1 * d2 * d3)
