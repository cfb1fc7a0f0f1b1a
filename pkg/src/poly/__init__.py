"""
Polynomial package.

Sparse polynomials over Z and F_p, the expression parser, and Gröbner bases
with standard-monomial counting.
"""

from .groebner import (
    GroebnerBasis,
    buchberger,
    count_leads_box,
    count_standard_monomials,
    ideal_membership,
    is_finite_colength,
    normal_form,
    s_polynomial,
    standard_monomials,
)
from .monomial import Exponents, Monomial, MonomialOrder, check_exponents, grevlex_cmp
from .parser import (
    expand_juxtaposition,
    parse_poly,
    parse_poly_list,
    parse_poly_mod_p,
    split_generators,
)
from .polynomial import (
    PolyP,
    PolyZ,
    Polynomial,
    frobenius_power,
    is_power_of,
    partial_derivative,
    reduce_mod_p,
)

__all__ = [
    "Exponents",
    "GroebnerBasis",
    "Monomial",
    "MonomialOrder",
    "PolyP",
    "PolyZ",
    "Polynomial",
    "buchberger",
    "check_exponents",
    "count_leads_box",
    "count_standard_monomials",
    "expand_juxtaposition",
    "frobenius_power",
    "grevlex_cmp",
    "ideal_membership",
    "is_finite_colength",
    "is_power_of",
    "normal_form",
    "parse_poly",
    "parse_poly_list",
    "parse_poly_mod_p",
    "partial_derivative",
    "reduce_mod_p",
    "s_polynomial",
    "split_generators",
    "standard_monomials",
]
