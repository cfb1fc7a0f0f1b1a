"""
Exact Hilbert-Kunz data for monomial ideals.

For a monomial ideal in the polynomial ring the Frobenius power just scales
exponents, so colengths are staircase counts and the HK multiplicity is the
co-volume of the staircase.

Responsibility: Gröbner-free staircase counts and exact staircase volumes
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable, Sequence, Union

from ..exceptions import ArityMismatchError, InfiniteColengthError
from ..poly import Exponents, Monomial, check_exponents, count_leads_box

logger = logging.getLogger(__name__)

MonomialLike = Union[Monomial, Sequence[int]]


def _exponents(gens: Iterable[MonomialLike], n: int) -> list[Exponents]:
    result = []
    for g in gens:
        exps = g.exponents if isinstance(g, Monomial) else check_exponents(g)
        if len(exps) != n:
            raise ArityMismatchError(f"monomial {exps} does not have {n} variables")
        result.append(tuple(exps))
    return result


def minimalize(gens: Sequence[Exponents]) -> list[Exponents]:
    """Minimal generators: drop every monomial divisible by another one"""
    minimal: list[Exponents] = []
    for m in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(all(a <= b for a, b in zip(g, m)) for g in minimal):
            minimal.append(m)
    return minimal


def _require_primary(gens: Sequence[Exponents], n: int) -> None:
    for i in range(n):
        if not any(g[i] > 0 and all(a == 0 for j, a in enumerate(g) if j != i) for g in gens):
            raise InfiniteColengthError(f"monomial ideal has no pure power of variable {i}")


def staircase_count(gens: Iterable[MonomialLike], n: int, q: int) -> int:
    """
    lg(k[x_1..x_n]/I^[q]) for a monomial ideal, counted directly.

    Raises:
        InfiniteColengthError: if the ideal is not primary
    """
    exps = minimalize(_exponents(gens, n))
    _require_primary(exps, n)
    scaled = [check_exponents(a * q for a in g) for g in exps]
    return count_leads_box(scaled, n)


def monomial_hk_exact(gens: Iterable[MonomialLike], n: int) -> Fraction:
    """
    Exact HK multiplicity of a primary monomial ideal.

    Inside the box [0, B]^n (B the largest generator exponent per variable),
    the union of the cones g + R_{>=0}^n has volume given by inclusion-exclusion
    over generator subsets, each subset contributing the cone at its lcm. The
    HK multiplicity is the box volume minus that union.

    Raises:
        InfiniteColengthError: if the ideal is not primary
    """
    exps = minimalize(_exponents(gens, n))
    _require_primary(exps, n)
    bounds = [max(g[i] for g in exps) for i in range(n)]
    union = 0
    for size in range(1, len(exps) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(exps, size):
            corner = [max(g[i] for g in subset) for i in range(n)]
            union += sign * prod(b - c for b, c in zip(bounds, corner))
    volume = prod(bounds) - union
    logger.debug(f"Staircase volume {volume} from {len(exps)} minimal generators")
    return Fraction(volume)
