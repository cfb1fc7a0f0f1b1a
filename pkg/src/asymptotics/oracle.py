"""
Finite Riemann-Roch summation oracles.

Each oracle sums chi over the twists that matter for a given limit and
divides by n^3. chi stands in for the cohomology dimension that is actually
summed; the two differ in O(n^2) terms only, so the oracles test the n^3
coefficient of the closed forms, all in exact rational arithmetic.

Responsibility: Summation oracles and the convergence table against a limit
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ..arith import QuadNum, quad_ceil
from ..config import settings
from ..exceptions import ThresholdMismatchError
from ..lattice import DivClass, antiample_threshold, pair
from ..orchestration.fanout import fanout_map
from .limits import boundary_slope, limit_surface
from .surface import SurfaceData

logger = logging.getLogger(__name__)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > settings.compute.oracle_max_n:
        raise ValueError(f"n={n} exceeds HKLAB_ORACLE_MAX_N={settings.compute.oracle_max_n}")


def _chi_sum(surface: SurfaceData, L: DivClass, n: int, ms: Iterable[int]) -> Fraction:
    """sum over m of chi(mH + nL), expanded in the intersection numbers"""
    lat, H, K = surface.lattice, surface.H, surface.K
    h2, hl, l2 = pair(lat, H, H), pair(lat, H, L), pair(lat, L, L)
    hk, lk = pair(lat, H, K), pair(lat, L, K)
    twice = 0
    count = 0
    for m in ms:
        square = m * m * h2 + 2 * m * n * hl + n * n * l2
        twice += square - (m * hk + n * lk)
        count += 1
    return Fraction(twice, 2) + count * surface.chi_o


def sum_oracle(surface: SurfaceData, L: DivClass, b: QuadNum, n: int) -> Fraction:
    """
    sum_{m=0}^{ceil(nb)-1} chi(mH + nL) / n^3.

    Raises:
        ThresholdMismatchError: if b is not the antiample threshold of L
    """
    _check_n(n)
    if not isinstance(b, QuadNum):
        b = QuadNum.rational(b)
    expected = antiample_threshold(surface.lattice, surface.H, L)
    if b != expected:
        raise ThresholdMismatchError(f"{b} is not the antiample threshold {expected} of {L}")
    top = quad_ceil(b * n)
    return _chi_sum(surface, L, n, range(top)) / n ** 3


def _check_slope(surface: SurfaceData, D: DivClass, u: QuadNum) -> None:
    expected = boundary_slope(surface.lattice, surface.H, D)
    if u != expected:
        raise ThresholdMismatchError(f"{u} is not the boundary slope {expected} of {D}")


def h1_sum_oracle(surface: SurfaceData, D: DivClass, u: QuadNum, n: int) -> Fraction:
    """-sum_{m=0}^{ceil(nu)-1} chi(mH + nD) / n^3 for D orthogonal to H"""
    _check_n(n)
    _check_slope(surface, D, u)
    return -_chi_sum(surface, D, n, range(quad_ceil(u * n))) / n ** 3


def h1_z_sum_oracle(surface: SurfaceData, D: DivClass, u: QuadNum, n: int) -> Fraction:
    """-sum over m in [-ceil(nu), ceil(nu)] of chi(mH + nD) / n^3"""
    _check_n(n)
    _check_slope(surface, D, u)
    top = quad_ceil(u * n)
    return -_chi_sum(surface, D, n, range(-top, top + 1)) / n ** 3


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    value: Fraction
    scaled_gap: QuadNum

    @property
    def gap(self) -> QuadNum:
        return self.scaled_gap / self.n


@dataclass(frozen=True)
class ConvergenceReport:
    """
    Oracle values against the closed-form limit.

    ``constant`` is the empirical C = max |oracle - limit| * n; it is
    reported, not asserted.
    """

    limit: QuadNum
    rows: tuple[ConvergenceRow, ...]

    @property
    def constant(self) -> QuadNum:
        return max(row.scaled_gap for row in self.rows)

    def within(self, C: Fraction | int) -> bool:
        """True iff |oracle(n) - limit| <= C/n on every row"""
        return all(row.scaled_gap <= C for row in self.rows)


def _oracle_task(task: tuple[SurfaceData, DivClass, QuadNum, int]) -> Fraction:
    surface, L, b, n = task
    return sum_oracle(surface, L, b, n)


def oracle_convergence(
    surface: SurfaceData,
    L: DivClass,
    b: QuadNum,
    ns: Iterable[int],
    jobs: Optional[int] = None,
) -> ConvergenceReport:
    """Run ``sum_oracle`` for every n (concurrently when jobs > 1)"""
    ns = list(ns)
    h2, hl, l2 = surface.intersections(L)
    limit = limit_surface(b, h2, hl, l2)
    values = fanout_map(_oracle_task, [(surface, L, b, n) for n in ns], jobs)
    rows = tuple(
        ConvergenceRow(n, value, abs(limit - value) * n)
        for n, value in zip(ns, values)
    )
    report = ConvergenceReport(limit, rows)
    if rows:
        logger.info(f"Oracle vs limit {limit}: empirical constant {report.constant}")
    return report
