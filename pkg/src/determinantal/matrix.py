"""
4x4 matrices of linear forms in X, Y, Z, W.

Responsibility: LinearMatrix4, the shipped matrices and JSON/string input
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from ..exceptions import UnknownPresetError
from ..poly import PolyZ, parse_poly

logger = logging.getLogger(__name__)

VARIABLES: tuple[str, ...] = ("X", "Y", "Z", "W")

# Characteristics in which the shipped determinants acquire singularities
BRINKMANN_SINGULAR_PRIMES: tuple[int, ...] = (37013, 651881, 742991)
FGGL_SINGULAR_PRIMES: tuple[int, ...] = (
    3,
    5,
    7,
    13,
    443,
    5399,
    9562057,
    578193147733,
    2202537665175172539619840469,
)

_BRINKMANN_ROWS = (
    ("X", "Y", "Z", "0"),
    ("Y", "Z", "0", "W"),
    ("Z", "0", "W", "X"),
    ("W", "W", "X", "Y"),
)

_FGGL_ROWS = (
    ("X", "Z", "Y+Z", "Z+W"),
    ("Y", "Z+W", "X+Y+Z+W", "X+W"),
    ("X+Z", "X+Y+Z+W", "X+Y", "Z"),
    ("X+Y+W", "X+Z", "W", "Z"),
)


@dataclass(frozen=True)
class LinearMatrix4:
    """
    4x4 matrix whose entries are homogeneous linear forms (or zero) over Z
    in the variables X, Y, Z, W.
    """

    entries: tuple[tuple[PolyZ, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != 4 or any(len(row) != 4 for row in entries):
            raise ValueError(f"expected a 4x4 matrix, got {[len(row) for row in entries]} columns per row")
        for i, row in enumerate(entries):
            for j, f in enumerate(row):
                if f.variables != VARIABLES:
                    raise ValueError(f"entry ({i + 1},{j + 1}) is over {f.variables}, expected {VARIABLES}")
                if not f.is_zero() and not f.is_homogeneous(1):
                    raise ValueError(f"entry ({i + 1},{j + 1}) = {f} is not a linear form")
        object.__setattr__(self, "entries", entries)

    def entry(self, i: int, j: int) -> PolyZ:
        """0-based entry access"""
        return self.entries[i][j]

    def column(self, j: int) -> list[PolyZ]:
        return [row[j] for row in self.entries]

    def without_column(self, j: int) -> list[list[PolyZ]]:
        return [[f for k, f in enumerate(row) if k != j] for row in self.entries]

    def to_strings(self) -> list[list[str]]:
        return [[str(f) for f in row] for row in self.entries]


def parse_linear_matrix(rows: Sequence[Sequence[str]]) -> LinearMatrix4:
    """
    Parse a 4x4 array of polynomial strings, the JSON matrix format.

    Raises:
        PolynomialSyntaxError: for a malformed entry
        ValueError: for a wrong shape or a non-linear entry
    """
    return LinearMatrix4(tuple(tuple(parse_poly(str(text), VARIABLES) for text in row) for row in rows))


def builtin_matrices() -> dict[str, LinearMatrix4]:
    """The two shipped determinantal matrices, keyed by name"""
    return {
        "brinkmann": parse_linear_matrix(_BRINKMANN_ROWS),
        "fggl": parse_linear_matrix(_FGGL_ROWS),
    }


def builtin_matrix(name: str) -> LinearMatrix4:
    matrices = builtin_matrices()
    if name not in matrices:
        raise UnknownPresetError(f"unknown matrix {name!r}; available: {sorted(matrices)}")
    return matrices[name]
