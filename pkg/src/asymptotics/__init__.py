"""
Asymptotic limits package.

Closed-form limits and HK multiplicity formulas, with finite Riemann-Roch
oracles that confirm them in exact arithmetic.
"""

from .betti import BettiTable, betti_term, finite_pd_hk, parameter_hk
from .chern import chern_resolution, cotangent_c2
from .limits import (
    SplitBundle,
    boundary_slope,
    h1_limit,
    h1_z_limit,
    irrationality_witness,
    limit_surface,
    limit_top,
    normalize_orthogonal,
    splitting_hk,
    surface_splitting_hk,
)
from .oracle import (
    ConvergenceReport,
    ConvergenceRow,
    h1_sum_oracle,
    h1_z_sum_oracle,
    oracle_convergence,
    sum_oracle,
)
from .surface import SurfaceData, WindowRow, chi_rr, vanishing_window

__all__ = [
    "BettiTable",
    "ConvergenceReport",
    "ConvergenceRow",
    "SplitBundle",
    "SurfaceData",
    "WindowRow",
    "betti_term",
    "boundary_slope",
    "chern_resolution",
    "chi_rr",
    "cotangent_c2",
    "finite_pd_hk",
    "h1_limit",
    "h1_sum_oracle",
    "h1_z_limit",
    "h1_z_sum_oracle",
    "irrationality_witness",
    "limit_surface",
    "limit_top",
    "normalize_orthogonal",
    "oracle_convergence",
    "parameter_hk",
    "splitting_hk",
    "surface_splitting_hk",
    "sum_oracle",
    "vanishing_window",
]
