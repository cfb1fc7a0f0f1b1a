"""
Surface data and Riemann-Roch.

Responsibility: SurfaceData presets, chi by Riemann-Roch and the window of
twists with non-positive self-intersection
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..arith import quad_ceil, quad_floor, solve_quadratic
from ..exceptions import LatticeError
from ..lattice import DivClass, GramLattice, pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceData:
    """
    Numerical data of a smooth projective surface.

    ``K`` is the canonical class and ``chi_o`` the Euler characteristic of
    the structure sheaf.
    """

    lattice: GramLattice
    H: DivClass
    K: DivClass
    chi_o: int

    def __post_init__(self) -> None:
        self.lattice.check(self.H, self.K)
        h2 = pair(self.lattice, self.H, self.H)
        if h2 <= 0:
            raise LatticeError(f"polarization must have positive square, got H^2 = {h2}")

    @classmethod
    def k3_quartic(cls) -> "SurfaceData":
        """Determinantal quartic: basis H, D with trivial canonical class"""
        return cls(GramLattice.quartic_plane(), DivClass.of(1, 0), DivClass.of(0, 0), 2)

    @classmethod
    def p1xp1(cls) -> "SurfaceData":
        """The smooth quadric with H = E + F and K = -2E - 2F"""
        return cls(GramLattice.p1xp1(), DivClass.of(1, 1), DivClass.of(-2, -2), 1)

    @property
    def h2(self) -> int:
        return pair(self.lattice, self.H, self.H)

    def intersections(self, L: DivClass) -> tuple[int, int, int]:
        """(H^2, H.L, L^2)"""
        return self.h2, pair(self.lattice, self.H, L), pair(self.lattice, L, L)


def chi_rr(surface: SurfaceData, D: DivClass) -> Fraction:
    """chi(O(D)) = (D^2 - D.K)/2 + chi(O)"""
    lat = surface.lattice
    return Fraction(pair(lat, D, D) - pair(lat, D, surface.K), 2) + surface.chi_o


@dataclass(frozen=True)
class WindowRow:
    m: int
    self_intersection: int
    chi: Fraction


def vanishing_window(surface: SurfaceData, H: DivClass, D: DivClass) -> list[WindowRow]:
    """
    Twists m with (mH + D)^2 <= 0, each with chi(D + mH).

    The window is the integer interval between the roots of
    H^2 m^2 + 2(H.D)m + D^2; it is empty when the roots are not real.
    """
    lat = surface.lattice
    h2, hd, d2 = pair(lat, H, H), pair(lat, H, D), pair(lat, D, D)
    if h2 <= 0:
        raise LatticeError(f"H^2 = {h2} must be positive")
    if hd * hd - h2 * d2 < 0:
        return []
    lower, upper = solve_quadratic(h2, 2 * hd, d2)
    rows = []
    for m in range(quad_ceil(lower), quad_floor(upper) + 1):
        twist = D + m * H
        rows.append(WindowRow(m, pair(lat, twist, twist), chi_rr(surface, twist)))
    logger.debug(f"Vanishing window for D={D}: {[r.m for r in rows]}")
    return rows
