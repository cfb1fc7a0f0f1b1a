"""
Determinantal quartic package.

Matrices of linear forms, their determinants and minors, and smoothness
checks of the resulting surfaces modulo primes.
"""

from .determinant import (
    QuarticSurfaceModel,
    curve_minors,
    det4,
    det_cofactor,
    det_leibniz,
    laplace_first_column,
    minors_match_up_to_sign,
    quartic_surface_model,
)
from .matrix import (
    BRINKMANN_SINGULAR_PRIMES,
    FGGL_SINGULAR_PRIMES,
    VARIABLES,
    LinearMatrix4,
    builtin_matrices,
    builtin_matrix,
    parse_linear_matrix,
)
from .smoothness import curve_lies_on_surface, is_smooth_mod_p, jacobian_ideal, singular_prime_scan

__all__ = [
    "BRINKMANN_SINGULAR_PRIMES",
    "FGGL_SINGULAR_PRIMES",
    "LinearMatrix4",
    "QuarticSurfaceModel",
    "VARIABLES",
    "builtin_matrices",
    "builtin_matrix",
    "curve_lies_on_surface",
    "curve_minors",
    "det4",
    "det_cofactor",
    "det_leibniz",
    "is_smooth_mod_p",
    "jacobian_ideal",
    "laplace_first_column",
    "minors_match_up_to_sign",
    "parse_linear_matrix",
    "quartic_surface_model",
    "singular_prime_scan",
]
