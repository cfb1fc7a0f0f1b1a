"""
Orbits of lattice isometries.

On the quartic plane the matrix [[1,1],[1,2]] preserves 4(x^2 + xy - y^2);
its powers carry Fibonacci numbers and the images of H approach the upper
boundary slope, the inverse powers the lower one.

Responsibility: Forward and inverse isometry orbits with exact slope gaps
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import Matrix

from ..arith import QuadNum
from ..exceptions import LatticeError, NonIsometryError
from .cone import ConeBoundary, positive_boundary
from .gram import DivClass, GramLattice, apply, as_matrix, is_isometry, pair

logger = logging.getLogger(__name__)

FIBONACCI_MATRIX: tuple[tuple[int, int], tuple[int, int]] = ((1, 1), (1, 2))


@dataclass(frozen=True)
class OrbitStep:
    """
    One orbit element M^k * start.

    ``gap`` is |c_2/c_1 - boundary| in a rank-2 lattice whose first basis
    vector has positive square, else None.
    """

    step: int
    divisor: DivClass
    self_intersection: int
    gap: Optional[QuadNum]


def fibonacci(k: int) -> int:
    """Fibonacci numbers indexed from f_0 = f_1 = 1"""
    if k < 0:
        raise ValueError(f"index must be nonnegative, got {k}")
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _basis_boundary(lat: GramLattice) -> Optional[ConeBoundary]:
    if lat.rank != 2:
        return None
    try:
        return positive_boundary(lat, lat.basis(0), lat.basis(1))
    except LatticeError as exc:
        logger.debug(f"No slope gaps for this lattice: {exc}")
        return None


def _gap(divisor: DivClass, target: Optional[QuadNum]) -> Optional[QuadNum]:
    if target is None or divisor.coords[0] == 0:
        return None
    slope = Fraction(divisor.coords[1], divisor.coords[0])
    return abs(target - slope)


def _walk(
    lat: GramLattice,
    M: np.ndarray,
    start: DivClass,
    n_steps: int,
    target: Optional[QuadNum],
) -> list[OrbitStep]:
    lat.check(start)
    if n_steps < 0:
        raise ValueError(f"n_steps must be nonnegative, got {n_steps}")
    steps: list[OrbitStep] = []
    current = start
    for k in range(n_steps + 1):
        steps.append(OrbitStep(k, current, pair(lat, current, current), _gap(current, target)))
        current = apply(M, current)
    return steps


def _require_isometry(lat: GramLattice, M: Iterable[Sequence[int]]) -> np.ndarray:
    matrix = as_matrix(M)
    if not is_isometry(lat, matrix):
        raise NonIsometryError(f"{matrix.tolist()} does not preserve the form {lat.gram}")
    return matrix


def fibonacci_orbit(
    lat: GramLattice,
    M: Iterable[Sequence[int]],
    start: DivClass,
    n_steps: int,
) -> list[OrbitStep]:
    """
    M^k * start for k = 0..n_steps, with gaps to the upper boundary slope.

    Raises:
        NonIsometryError: if M does not preserve the form
    """
    matrix = _require_isometry(lat, M)
    boundary = _basis_boundary(lat)
    steps = _walk(lat, matrix, start, n_steps, boundary.upper if boundary else None)
    logger.debug(f"Orbit of {start} under {matrix.tolist()}: {len(steps)} steps")
    return steps


def inverse_orbit(
    lat: GramLattice,
    M: Iterable[Sequence[int]],
    start: DivClass,
    n_steps: int,
) -> list[OrbitStep]:
    """
    M^-k * start for k = 0..n_steps, with gaps to the lower boundary slope.

    An isometry of a nondegenerate form has determinant +-1, so the inverse
    is integral.

    Raises:
        NonIsometryError: if M does not preserve the form
    """
    matrix = _require_isometry(lat, M)
    inverse = inverse_matrix(matrix)
    boundary = _basis_boundary(lat)
    return _walk(lat, inverse, start, n_steps, boundary.lower if boundary else None)


def inverse_matrix(M: Iterable[Sequence[int]]) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix"""
    sym = Matrix(as_matrix(M).tolist())
    det = sym.det()
    if det not in (1, -1):
        raise LatticeError(f"matrix has determinant {det}, inverse is not integral")
    return as_matrix((sym.adjugate() * det).tolist())


def preserves_pairings(
    lat: GramLattice,
    M: Iterable[Sequence[int]],
    classes: Sequence[DivClass],
    power: int,
) -> bool:
    """pair(M^k u, M^k v) == pair(u, v) for all u, v in ``classes``"""
    matrix = as_matrix(M)
    moved = list(classes)
    for _ in range(power):
        moved = [apply(matrix, c) for c in moved]
    return all(
        pair(lat, moved[i], moved[j]) == pair(lat, classes[i], classes[j])
        for i in range(len(classes))
        for j in range(i, len(classes))
    )
