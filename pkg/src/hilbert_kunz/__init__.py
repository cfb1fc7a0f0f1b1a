"""
Hilbert-Kunz package.

Frobenius-power colengths of ideals in quotient rings, exact staircase data
for monomial ideals, and the module-to-ideal reduction identity.
"""

from .functions import (
    HKEstimate,
    hk_estimate,
    hk_series,
    hkf_cyclic_module,
    hkf_ideal,
    quadric_closed_form,
)
from .monomial import minimalize, monomial_hk_exact, staircase_count
from .reduction import PresentationMatrix, ReductionRow, reduction_ideal, verify_reduction
from .ring import RingPresentation, embed

__all__ = [
    "HKEstimate",
    "PresentationMatrix",
    "ReductionRow",
    "RingPresentation",
    "embed",
    "hk_estimate",
    "hk_series",
    "hkf_cyclic_module",
    "hkf_ideal",
    "minimalize",
    "monomial_hk_exact",
    "quadric_closed_form",
    "reduction_ideal",
    "staircase_count",
    "verify_reduction",
]
