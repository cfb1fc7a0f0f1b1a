"""
Integer lattices with a symmetric bilinear form.

Models numerical Néron-Severi groups of surfaces: a Gram matrix of
intersection numbers and integer divisor classes. Matrix products run on
numpy object arrays so entries stay Python integers.

Responsibility: GramLattice and DivClass value types, pairing, isometries,
signature checks
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from ..exceptions import LatticeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivClass:
    """Integer coordinate vector of a divisor class"""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        if not all(isinstance(c, (int, np.integer)) for c in coords):
            raise LatticeError(f"divisor coordinates must be integers, got {coords}")
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    @classmethod
    def of(cls, *coords: int) -> "DivClass":
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "DivClass") -> None:
        if other.rank != self.rank:
            raise LatticeError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "DivClass") -> "DivClass":
        self._check(other)
        return DivClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        self._check(other)
        return DivClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivClass":
        return DivClass(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "DivClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivClass(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def vector(self) -> np.ndarray:
        return np.array(self.coords, dtype=object)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class GramLattice:
    """
    Lattice Z^rank with a symmetric integer Gram matrix.

    Example:
        lat = GramLattice.quartic_plane()
        pair(lat, DivClass.of(1, 0), DivClass.of(0, 1))   # 2
    """

    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        rank = len(gram)
        if rank == 0 or any(len(row) != rank for row in gram):
            raise LatticeError(f"Gram matrix must be square and nonempty, got {gram}")
        if any(gram[i][j] != gram[j][i] for i in range(rank) for j in range(rank)):
            raise LatticeError(f"Gram matrix is not symmetric: {gram}")
        labels = tuple(self.labels)
        if labels and len(labels) != rank:
            raise LatticeError(f"{len(labels)} labels for rank {rank}")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def quartic_plane(cls) -> "GramLattice":
        """The H, D plane of a determinantal quartic: H^2 = 4, H.D = 2, D^2 = -4"""
        return cls(((4, 2), (2, -4)), ("H", "D"))

    @classmethod
    def p1xp1(cls) -> "GramLattice":
        """Fibre classes of P^1 x P^1"""
        return cls(((0, 1), (1, 0)), ("E", "F"))

    @classmethod
    def from_descriptor(cls, payload: Mapping[str, Any]) -> "GramLattice":
        """Build from ``{"gram": [[...]], "labels": [...]}``"""
        if "gram" not in payload:
            raise LatticeError("lattice descriptor needs a 'gram' entry")
        return cls(tuple(tuple(row) for row in payload["gram"]), tuple(payload.get("labels", ())))

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=object)

    def basis(self, index: int) -> DivClass:
        return DivClass(tuple(int(i == index) for i in range(self.rank)))

    def label(self, divisor: DivClass) -> str:
        """Readable form such as ``-2H + D`` when labels are known"""
        if not self.labels:
            return str(divisor)
        parts = []
        for coeff, name in zip(divisor.coords, self.labels):
            if coeff == 0:
                continue
            text = name if abs(coeff) == 1 else f"{abs(coeff)}{name}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts) or "0"

    def check(self, *divisors: DivClass) -> None:
        for d in divisors:
            if d.rank != self.rank:
                raise LatticeError(f"class of rank {d.rank} in a lattice of rank {self.rank}")


def pair(lat: GramLattice, u: DivClass, v: DivClass) -> int:
    """Intersection number u^T G v"""
    lat.check(u, v)
    return int(u.vector().dot(lat.matrix).dot(v.vector()))


def square(lat: GramLattice, u: DivClass) -> int:
    return pair(lat, u, u)


def determinant(lat: GramLattice) -> int:
    """Exact determinant by fraction-free elimination"""
    from sympy import Matrix

    return int(Matrix(lat.gram).det())


def hodge_signature_ok(lat: GramLattice) -> bool:
    """
    True iff the form has signature (1, rank - 1).

    Rank 2 is decided exactly (determinant < 0); higher ranks use the
    eigenvalues of the Gram matrix.
    """
    if lat.rank == 1:
        return lat.gram[0][0] > 0
    if lat.rank == 2:
        return determinant(lat) < 0
    eigenvalues = np.linalg.eigvalsh(np.array(lat.gram, dtype=float))
    positive = int(np.sum(eigenvalues > 1e-9))
    negative = int(np.sum(eigenvalues < -1e-9))
    return positive == 1 and negative == lat.rank - 1


def as_matrix(M: Iterable[Sequence[int]]) -> np.ndarray:
    return np.array([[int(x) for x in row] for row in M], dtype=object)


def apply(M: np.ndarray, divisor: DivClass) -> DivClass:
    return DivClass(tuple(int(x) for x in M.dot(divisor.vector())))


def is_isometry(lat: GramLattice, M: Iterable[Sequence[int]]) -> bool:
    """True iff M^T G M = G"""
    matrix = as_matrix(M)
    if matrix.shape != (lat.rank, lat.rank):
        logger.debug(f"matrix of shape {matrix.shape} cannot act on rank {lat.rank}")
        return False
    G = lat.matrix
    return bool(np.array_equal(matrix.T.dot(G).dot(matrix), G))


def proportional(u: DivClass, v: DivClass) -> bool:
    """True iff u and v are linearly dependent"""
    n = u.rank
    return all(
        u.coords[i] * v.coords[j] == u.coords[j] * v.coords[i]
        for i in range(n)
        for j in range(i + 1, n)
    )

