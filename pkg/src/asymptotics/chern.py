"""
Chern-class bookkeeping for the rank-two kernel of a monomial resolution.

Classes are multiples of powers of H with H^3 = 0, so total Chern classes
are polynomials in t truncated at t^3.

Responsibility: c1, degree and c2 of the kernel bundle with an identity check
"""

from __future__ import annotations

import logging

from sympy import Poly, symbols

from ..exceptions import ConsistencyError

logger = logging.getLogger(__name__)

_t = symbols("t")


def _truncated(poly: Poly, order: int = 3) -> tuple[int, ...]:
    return tuple(int(poly.coeff_monomial(_t ** k)) for k in range(order))


def _total_chern(*coeffs: int) -> Poly:
    return Poly(sum(c * _t ** k for k, c in enumerate(coeffs)), _t)


def cotangent_c2(delta: int) -> int:
    """
    delta^2 - 4 delta + 6, the second Chern class of the companion bundle.

    Raises:
        ConsistencyError: if (1 - delta t)(1 + (delta-4)t + c2 t^2) != 1 - 4t + 6t^2 mod t^3
    """
    if delta < 1:
        raise ValueError(f"delta must be positive, got {delta}")
    c2 = delta * delta - 4 * delta + 6
    product = _total_chern(1, -delta) * _total_chern(1, delta - 4, c2)
    if _truncated(product) != (1, -4, 6):
        raise ConsistencyError(f"companion Chern identity fails for delta={delta}: {_truncated(product)}")
    return c2


def chern_resolution(delta: int) -> tuple[int, int, int]:
    """
    (c1 coefficient, degree, c2 coefficient) = (-4-delta, (-4-delta)delta, 2+4delta).

    Raises:
        ConsistencyError: if (1 + c1 t + c2 t^2)(1 + (delta-4)t + (delta^2-4delta+6)t^2)
            differs from 1 - 8t + 24t^2 mod t^3
    """
    if delta < 1:
        raise ValueError(f"delta must be positive, got {delta}")
    c1 = -4 - delta
    c2 = 2 + 4 * delta
    product = _total_chern(1, c1, c2) * _total_chern(1, delta - 4, cotangent_c2(delta))
    truncated = _truncated(product)
    if truncated != (1, -8, 24):
        logger.error(f"Chern identity fails for delta={delta}: {truncated}")
        raise ConsistencyError(f"Chern identity fails for delta={delta}: got {truncated}")
    return c1, c1 * delta, c2
