"""
Positive-cone boundaries and ample/antiample thresholds.

Thresholds are read off the roots of x -> (xH + L)^2. This agrees with the
sup/inf over ample classes whenever the closed ample cone equals the closed
positive cone, which holds for the surfaces handled here; ampleness itself is
never verified geometrically.

Responsibility: ConeBoundary, thresholds, product-surface thresholds and
self-intersection profiles
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..arith import QuadNum, solve_quadratic
from ..exceptions import LatticeError
from .gram import DivClass, GramLattice, pair, proportional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConeBoundary:
    """Parameters t with (H + tD)^2 = 0, lower <= upper"""

    lower: QuadNum
    upper: QuadNum

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise LatticeError(f"boundary out of order: {self.lower} > {self.upper}")

    def contains(self, t: QuadNum | Fraction | int) -> bool:
        """True iff H + tD lies strictly inside the positive cone"""
        return self.lower < t < self.upper


def _require_positive(lat: GramLattice, H: DivClass) -> int:
    h2 = pair(lat, H, H)
    if h2 <= 0:
        raise LatticeError(f"polarization must have positive square, got H^2 = {h2}")
    return h2


def positive_boundary(lat: GramLattice, H: DivClass, D: DivClass) -> ConeBoundary:
    """
    Boundary of the positive cone in the plane spanned by H and D.

    Raises:
        LatticeError: if H^2 <= 0, D is proportional to H, or D^2 = 0 (the
            plane then meets the boundary only once)
    """
    h2 = _require_positive(lat, H)
    if proportional(H, D):
        raise LatticeError(f"D = {D} is proportional to H = {H}")
    hd = pair(lat, H, D)
    d2 = pair(lat, D, D)
    if d2 == 0:
        raise LatticeError(f"D^2 = 0: (H + tD)^2 = {h2} + {2 * hd}t has a single root")
    lower, upper = solve_quadratic(d2, 2 * hd, h2)
    logger.debug(f"Positive cone boundary for H={H}, D={D}: [{lower}, {upper}]")
    return ConeBoundary(lower, upper)


def _threshold_roots(lat: GramLattice, H: DivClass, L: DivClass) -> tuple[QuadNum, QuadNum]:
    h2 = _require_positive(lat, H)
    return solve_quadratic(h2, 2 * pair(lat, H, L), pair(lat, L, L))


def antiample_threshold(lat: GramLattice, H: DivClass, L: DivClass) -> QuadNum:
    """
    b(L) = (-H.L - sqrt((H.L)^2 - H^2 L^2)) / H^2, the smaller root.

    Below b(L) the class xH + L meets H negatively.

    Raises:
        LatticeError: if H^2 <= 0
        NegativeDiscriminantError: if the form violates the Hodge index
    """
    return _threshold_roots(lat, H, L)[0]


def ample_threshold(lat: GramLattice, H: DivClass, L: DivClass) -> QuadNum:
    """a(L), the larger root; a(L) = -b(-L)"""
    return _threshold_roots(lat, H, L)[1]


def twisted_square(lat: GramLattice, H: DivClass, L: DivClass, x: QuadNum) -> QuadNum:
    """(xH + L)^2 for a quadratic-irrational x"""
    return x * x * pair(lat, H, H) + x * (2 * pair(lat, H, L)) + pair(lat, L, L)


def product_threshold(r: int, s: int, m: int, n: int) -> Fraction:
    """
    Antiample threshold of D = mE + nF for H = rE + sF on a product with
    nef cone spanned by the fibre classes E, F: min(-m/r, -n/s).
    """
    if r <= 0 or s <= 0:
        raise LatticeError(f"H = {r}E + {s}F is not ample")
    return min(Fraction(-m, r), Fraction(-n, s))


def self_intersection_profile(
    lat: GramLattice,
    H: DivClass,
    D: DivClass,
    ms: Iterable[int],
) -> list[tuple[int, int]]:
    """Pairs (m, (mH + D)^2)"""
    h2, hd, d2 = pair(lat, H, H), pair(lat, H, D), pair(lat, D, D)
    return [(m, m * m * h2 + 2 * m * hd + d2) for m in ms]
