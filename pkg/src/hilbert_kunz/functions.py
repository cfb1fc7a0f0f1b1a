"""
Hilbert-Kunz functions of ideals via Frobenius-power colengths.

lg(R/I^[q]) is computed as the number of standard monomials of a Gröbner
basis of (relations) + I^[q]. The relations are never raised to q-th powers.

Responsibility: Colength samples, series and multiplicity estimates
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..models.hk_models import HKSample, HKSeries
from ..orchestration.fanout import fanout_map
from ..poly import PolyP, buchberger, count_standard_monomials, frobenius_power
from .ring import RingPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HKEstimate:
    """
    Two exact estimators of the Hilbert-Kunz multiplicity from one series.

    ``ratio_at_max`` is lg/q^dim at the largest e. ``difference_estimate``
    divides the last length increment by the matching increment of q^dim,
    which cancels the next-order term when the function is a polynomial in q.
    """

    dimension: int
    ratio_at_max: Fraction
    difference_estimate: Fraction


def hkf_ideal(ring: RingPresentation, gens: Sequence[PolyP], e: int) -> HKSample:
    """
    Colength lg(P/(relations + gens^[q])) with q = p^e.

    Args:
        ring: Quotient ring presentation
        gens: Ideal generators over the ring's polynomial ring
        e: Frobenius exponent

    Returns:
        HKSample(e, q, length)

    Raises:
        InfiniteColengthError: if the ideal is not primary to the maximal ideal
    """
    if e < 0:
        raise ValueError(f"Frobenius exponent must be nonnegative, got {e}")
    for g in gens:
        ring.check_poly(g)
    q = ring.characteristic ** e
    frobenius = frobenius_power(gens, q)
    basis = buchberger(list(ring.relations) + frobenius)
    length = count_standard_monomials(basis)
    logger.debug(f"hkf e={e} q={q}: basis size {len(basis)}, length {length}")
    return HKSample(e=e, q=q, length=length)


def _sample_task(task: tuple[RingPresentation, tuple[PolyP, ...], int]) -> HKSample:
    ring, gens, e = task
    return hkf_ideal(ring, gens, e)


def hk_series(
    ring: RingPresentation,
    gens: Sequence[PolyP],
    e_max: int,
    jobs: Optional[int] = None,
    e_min: int = 0,
) -> HKSeries:
    """
    Measure lg(R/I^[p^e]) independently for e = e_min..e_max.

    Samples for different e run concurrently when jobs > 1.
    """
    if e_max < e_min:
        raise ValueError(f"e_max={e_max} is below e_min={e_min}")
    gens = tuple(gens)
    tasks = [(ring, gens, e) for e in range(e_min, e_max + 1)]
    samples = fanout_map(_sample_task, tasks, jobs)
    lengths = [s.length for s in samples]
    if any(b < a for a, b in zip(lengths, lengths[1:])):
        logger.warning(f"Hilbert-Kunz lengths are not monotone: {lengths}")
    logger.info(f"Measured {len(samples)} samples, lengths {lengths}")
    return HKSeries(characteristic=ring.characteristic, dimension=ring.dimension, samples=samples)


def hk_estimate(series: HKSeries) -> HKEstimate:
    """
    Ratio and first-difference estimates of the HK multiplicity.

    Raises:
        ValueError: with fewer than two samples
    """
    if len(series.samples) < 2:
        raise ValueError("hk_estimate needs at least two samples")
    dim = series.dimension
    prev, last = series.samples[-2], series.samples[-1]
    ratio = Fraction(last.length, last.q ** dim)
    difference = Fraction(last.length - prev.length, last.q ** dim - prev.q ** dim)
    return HKEstimate(dimension=dim, ratio_at_max=ratio, difference_estimate=difference)


def hkf_cyclic_module(
    ring: RingPresentation,
    blocks: Sequence[Sequence[PolyP]],
    e: int,
) -> int:
    """HKF of M = direct sum of R/b_k: the sum of the block colengths"""
    return sum(hkf_ideal(ring, block, e).length for block in blocks)


def quadric_closed_form(q: int) -> Fraction:
    """
    Conjectural closed form (4q^3 - q)/3 for the maximal ideal of the quadric
    cone in characteristic 2. Reported next to measured values, never assumed.
    """
    return Fraction(4 * q ** 3 - q, 3)
