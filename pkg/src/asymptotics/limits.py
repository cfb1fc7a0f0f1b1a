"""
Closed-form asymptotic limits.

Every value is exact in Q or Q(sqrt d). Limits built from an irrational
threshold stay irrational unless an explicit cancellation happens, which
``irrationality_witness`` rules out.

Responsibility: Top-cohomology limits, split-bundle HK multiplicities and
the h^1 limit of an orthogonalized class
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from ..arith import QuadNum
from ..exceptions import LatticeError, ThresholdMismatchError
from ..lattice import DivClass, GramLattice, antiample_threshold, pair, proportional, twisted_square
from .betti import BettiTable, betti_term
from .surface import SurfaceData

logger = logging.getLogger(__name__)


def _as_quad(value: QuadNum | Fraction | int) -> QuadNum:
    return value if isinstance(value, QuadNum) else QuadNum.rational(value)


def limit_top(d: int, b: QuadNum | Fraction | int, mixed: Sequence[int]) -> QuadNum:
    """
    (b/d!) * sum_{i=0..d} C(d,i)/(i+1) * b^i * H^i.L^(d-i).

    Args:
        d: Dimension
        b: Antiample threshold of L
        mixed: H^i.L^(d-i) for i = 0..d
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if len(mixed) != d + 1:
        raise ValueError(f"need {d + 1} intersection numbers, got {len(mixed)}")
    b = _as_quad(b)
    total = QuadNum.rational(0, b.d)
    for i, number in enumerate(mixed):
        total = total + Fraction(comb(d, i), i + 1) * number * b ** i
    return b * total / factorial(d)


def limit_surface(b: QuadNum | Fraction | int, H2: int, HL: int, L2: int) -> QuadNum:
    """(b/2)(b^2 H^2/3 + b H.L + L^2)"""
    b = _as_quad(b)
    return b / 2 * (b * b * Fraction(H2, 3) + b * HL + L2)


def irrationality_witness(b: QuadNum, H2: int, HL: int, L2: int) -> bool:
    """
    True when the surface limit for an irrational b is irrational.

    For b a square root of a rational the irrational part of the limit is
    (b/2)(b^2 H^2/3 + L^2), so that factor must not vanish. The limit itself
    is checked as well since a general b mixes both parts.
    """
    if b.is_rational():
        return False
    if b * b * Fraction(H2, 3) + L2 == 0:
        return False
    return not limit_surface(b, H2, HL, L2).is_rational()


@dataclass(frozen=True)
class SplitBundle:
    """Line-bundle summands L_j with their antiample thresholds b_j"""

    summands: tuple[DivClass, ...]
    thresholds: tuple[QuadNum, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(self.summands))
        object.__setattr__(self, "thresholds", tuple(_as_quad(b) for b in self.thresholds))
        if len(self.summands) != len(self.thresholds):
            raise ValueError(f"{len(self.summands)} summands but {len(self.thresholds)} thresholds")

    @classmethod
    def on_surface(cls, surface: SurfaceData, summands: Sequence[DivClass]) -> "SplitBundle":
        """Thresholds computed from the surface lattice"""
        thresholds = [antiample_threshold(surface.lattice, surface.H, L) for L in summands]
        return cls(tuple(summands), tuple(thresholds))

    def validate(self, surface: SurfaceData) -> None:
        """
        Raises:
            ThresholdMismatchError: if some (b_j H + L_j)^2 is nonzero
        """
        for L, b in zip(self.summands, self.thresholds):
            if twisted_square(surface.lattice, surface.H, L, b) != 0:
                raise ThresholdMismatchError(f"{b} is not a threshold of {L}")

    def intersections(self, surface: SurfaceData) -> list[list[int]]:
        """[L^2, H.L, H^2] per summand"""
        rows = []
        for L in self.summands:
            h2, hl, l2 = surface.intersections(L)
            rows.append([l2, hl, h2])
        return rows


def splitting_hk(
    d: int,
    Hd: int,
    bundle: SplitBundle,
    intersections: Sequence[Sequence[int]],
    table: BettiTable,
) -> QuadNum:
    """
    HK multiplicity when the top syzygy bundle splits into line bundles:
    sum_j limit_top(d, b_j, ...) plus the Betti term of the punctured
    resolution.
    """
    if len(intersections) != len(bundle.thresholds):
        raise ValueError(f"{len(intersections)} intersection rows for {len(bundle.thresholds)} summands")
    total = QuadNum.rational(0)
    for b, mixed in zip(bundle.thresholds, intersections):
        part = limit_top(d, b, mixed)
        logger.debug(f"Summand with threshold {b}: {part}")
        total = total + part
    return total + betti_term(d, Hd, table)


def surface_splitting_hk(surface: SurfaceData, bundle: SplitBundle, table: BettiTable) -> QuadNum:
    bundle.validate(surface)
    return splitting_hk(2, surface.h2, bundle, bundle.intersections(surface), table)


def normalize_orthogonal(lat: GramLattice, H: DivClass, D: DivClass) -> DivClass:
    """
    Primitive class (H^2 D - (H.D) H)/g orthogonal to H, g the content.

    Raises:
        LatticeError: if D is proportional to H
    """
    if proportional(H, D):
        raise LatticeError(f"D = {D} is proportional to H = {H}")
    raw = pair(lat, H, H) * D - pair(lat, H, D) * H
    content = 0
    for c in raw.coords:
        content = gcd(content, c)
    return DivClass(tuple(c // content for c in raw.coords))


def boundary_slope(lat: GramLattice, H: DivClass, D: DivClass) -> QuadNum:
    """u = sqrt(-D^2/H^2) for D orthogonal to H"""
    h2 = pair(lat, H, H)
    if h2 <= 0:
        raise LatticeError(f"H^2 = {h2} must be positive")
    if pair(lat, H, D) != 0:
        raise LatticeError(f"H.D = {pair(lat, H, D)}, expected an orthogonal class")
    d2 = pair(lat, D, D)
    if d2 >= 0 and not D.is_zero():
        raise LatticeError(f"orthogonal class needs negative square, got D^2 = {d2}")
    return QuadNum.sqrt(Fraction(-d2, h2))


def h1_limit(lat: GramLattice, H: DivClass, D: DivClass) -> QuadNum:
    """
    lim sum_{m >= 0} h^1(nD + mH)/n^3 = -u D^2 / 3 for D orthogonal to H.

    Raises:
        LatticeError: if H.D != 0 or D^2 >= 0 for nonzero D
    """
    u = boundary_slope(lat, H, D)
    return u * Fraction(-pair(lat, D, D), 3)


def h1_z_limit(lat: GramLattice, H: DivClass, D: DivClass) -> QuadNum:
    """The same limit summed over all m in Z; twice the m >= 0 value by the H-axis symmetry"""
    return h1_limit(lat, H, D) * 2
