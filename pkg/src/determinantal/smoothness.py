"""
Smoothness of quartic surfaces in positive characteristic.

V+(F) in P^3 is smooth over the algebraic closure of F_p iff the ideal
(F, dF/dX, dF/dY, dF/dZ, dF/dW) has finite colength. F itself is kept in the
ideal since the Euler relation fails when p divides the degree.

Responsibility: Jacobian ideals, per-prime smoothness and prime scans
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

from ..exceptions import DegenerateReductionError
from ..orchestration.fanout import fanout_map
from ..poly import (
    PolyP,
    PolyZ,
    buchberger,
    ideal_membership,
    is_finite_colength,
    partial_derivative,
    reduce_mod_p,
)
from .determinant import curve_minors, det4
from .matrix import LinearMatrix4

logger = logging.getLogger(__name__)


def jacobian_ideal(F: PolyZ) -> list[PolyZ]:
    """(F, dF/dX_1, ..., dF/dX_n)"""
    return [F] + [partial_derivative(F, i) for i in range(F.nvars)]


def _nonzero_mod_p(polys: Iterable[PolyZ], p: int) -> list[PolyP]:
    reduced = [reduce_mod_p(f, p) for f in polys]
    return [f for f in reduced if not f.is_zero()]


def is_smooth_mod_p(F: PolyZ, p: int) -> bool:
    """
    Jacobian criterion over F_p.

    Raises:
        NotPrimeError: if p is not a supported prime
        DegenerateReductionError: if F vanishes mod p
    """
    if reduce_mod_p(F, p).is_zero():
        raise DegenerateReductionError(f"equation vanishes modulo {p}")
    basis = buchberger(_nonzero_mod_p(jacobian_ideal(F), p))
    smooth = is_finite_colength(basis)
    logger.debug(f"p={p}: Jacobian basis of size {len(basis)}, smooth={smooth}")
    return smooth


def _smooth_task(task: tuple[PolyZ, int]) -> bool:
    F, p = task
    return is_smooth_mod_p(F, p)


def singular_prime_scan(F: PolyZ, primes: Iterable[int], jobs: Optional[int] = None) -> list[int]:
    """Primes among ``primes`` where V+(F) is singular, in input order"""
    primes = list(primes)
    flags = fanout_map(_smooth_task, [(F, p) for p in primes], jobs)
    singular = [p for p, smooth in zip(primes, flags) if not smooth]
    logger.info(f"Scanned {len(primes)} primes, {len(singular)} singular")
    return singular


def curve_lies_on_surface(m: LinearMatrix4, p: int) -> bool:
    """det A lies in the ideal of the curve minors over F_p"""
    F = reduce_mod_p(det4(m), p)
    gens = _nonzero_mod_p(curve_minors(m), p)
    if not gens:
        return F.is_zero()
    return ideal_membership(F, buchberger(gens))
