"""
Exact arithmetic package.

Rationals and real quadratic fields Q(sqrt d) with exact sign, floor and
root finding.
"""

from .quadratic import (
    BigRational,
    DEFAULT_RADICAND,
    NegativeDiscriminantError,
    QuadNum,
    parse_quadnum,
    quad_ceil,
    quad_floor,
    quad_sign,
    solve_quadratic,
    squarefree_decomposition,
)

__all__ = [
    "BigRational",
    "DEFAULT_RADICAND",
    "NegativeDiscriminantError",
    "QuadNum",
    "parse_quadnum",
    "quad_ceil",
    "quad_floor",
    "quad_sign",
    "solve_quadratic",
    "squarefree_decomposition",
]
