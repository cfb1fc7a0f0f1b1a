"""
Néron-Severi lattice package.

Gram lattices, positive-cone thresholds and isometry orbits.
"""

from .cone import (
    ConeBoundary,
    ample_threshold,
    antiample_threshold,
    positive_boundary,
    product_threshold,
    self_intersection_profile,
    twisted_square,
)
from .gram import (
    DivClass,
    GramLattice,
    determinant,
    hodge_signature_ok,
    is_isometry,
    pair,
    proportional,
    square,
)
from .orbit import (
    FIBONACCI_MATRIX,
    OrbitStep,
    fibonacci,
    fibonacci_orbit,
    inverse_matrix,
    inverse_orbit,
    preserves_pairings,
)
from .represent import represents, two_adic_obstruction, two_adic_valuation

__all__ = [
    "ConeBoundary",
    "DivClass",
    "FIBONACCI_MATRIX",
    "GramLattice",
    "OrbitStep",
    "ample_threshold",
    "antiample_threshold",
    "determinant",
    "fibonacci",
    "fibonacci_orbit",
    "hodge_signature_ok",
    "inverse_matrix",
    "inverse_orbit",
    "is_isometry",
    "pair",
    "positive_boundary",
    "preserves_pairings",
    "product_threshold",
    "proportional",
    "represents",
    "self_intersection_profile",
    "square",
    "twisted_square",
    "two_adic_obstruction",
    "two_adic_valuation",
]
