"""
Determinants and maximal minors of matrices of linear forms.

Responsibility: det4 by two independent expansions, the curve minors and the
quartic surface model
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from sympy.combinatorics import Permutation

from ..exceptions import ConsistencyError
from ..lattice import GramLattice
from ..poly import PolyZ
from .matrix import VARIABLES, LinearMatrix4

logger = logging.getLogger(__name__)

Grid = Sequence[Sequence[PolyZ]]


def _one() -> PolyZ:
    return PolyZ({(0,) * len(VARIABLES): 1}, VARIABLES)


def det_leibniz(rows: Grid) -> PolyZ:
    """Sum over all permutations with their signatures"""
    n = len(rows)
    total = PolyZ.zero(VARIABLES)
    for perm in permutations(range(n)):
        product = _one()
        for i, j in enumerate(perm):
            product = product * rows[i][j]
            if product.is_zero():
                break
        if not product.is_zero():
            total = total + product * Permutation(list(perm)).signature()
    return total


def det_cofactor(rows: Grid) -> PolyZ:
    """Laplace expansion along the first column, recursively"""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = PolyZ.zero(VARIABLES)
    for i in range(n):
        if rows[i][0].is_zero():
            continue
        minor = [row[1:] for k, row in enumerate(rows) if k != i]
        term = rows[i][0] * det_cofactor(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


def det4(m: LinearMatrix4) -> PolyZ:
    """
    Integer determinant of a linear 4x4 matrix.

    Raises:
        ConsistencyError: if the Leibniz and cofactor expansions disagree
    """
    leibniz = det_leibniz(m.entries)
    cofactor = det_cofactor(m.entries)
    if leibniz != cofactor:
        logger.error(f"Determinant expansions disagree: {leibniz} vs {cofactor}")
        raise ConsistencyError("Leibniz and cofactor determinants differ")
    return leibniz


def curve_minors(m: LinearMatrix4) -> list[PolyZ]:
    """
    Signed maximal minors of the 4x3 matrix left after deleting the first
    column. Minor i omits row i and carries the sign (-1)^i, so that
    sum_i A[i][0] * minor_i = det A.
    """
    rest = m.without_column(0)
    minors = []
    for i in range(4):
        minor = det_cofactor([row for k, row in enumerate(rest) if k != i])
        minors.append(minor if i % 2 == 0 else -minor)
    return minors


def laplace_first_column(m: LinearMatrix4, minors: Sequence[PolyZ]) -> PolyZ:
    total = PolyZ.zero(VARIABLES)
    for entry, minor in zip(m.column(0), minors):
        total = total + entry * minor
    return total


def minors_match_up_to_sign(minors: Sequence[PolyZ], expected: Sequence[PolyZ]) -> bool:
    """True iff minors[i] = +-expected[i] for every i"""
    if len(minors) != len(expected):
        return False
    return all(f == g or f == -g for f, g in zip(minors, expected))


@dataclass(frozen=True)
class QuarticSurfaceModel:
    """A determinantal quartic together with the H, D plane of its Picard lattice"""

    F: PolyZ
    picard_plane: GramLattice = field(default_factory=GramLattice.quartic_plane)

    def __post_init__(self) -> None:
        if not self.F.is_homogeneous(4) or self.F.is_zero():
            raise ValueError(f"surface equation must be a nonzero quartic form, got {self.F}")


def quartic_surface_model(m: LinearMatrix4) -> QuarticSurfaceModel:
    return QuarticSurfaceModel(det4(m))
