"""
Module-to-ideal reduction.

A finite-length module M = coker(A) over R with annihilator a gives the ideal

    I = a + (f_1j T_1 + ... + f_mj T_m, j = 1..n) + (T_i T_j)

in S = R[T_1..T_m], and lg_S(S/I^[q]) = q^m (lg(R/a^[q]) + HKF(M, e)). For
block-diagonal A with cyclic blocks both sides are computable independently.

Responsibility: Presentation matrices, the reduction ideal, and the exact
verification of the colength identity
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..poly import PolyP
from .functions import hkf_cyclic_module, hkf_ideal
from .ring import RingPresentation, embed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PresentationMatrix:
    """
    m x n matrix over the ambient polynomial ring, plus generators of Ann M.

    Columns are the relations of M = R^m / (column span).
    """

    entries: tuple[tuple[PolyP, ...], ...]
    annihilator: tuple[PolyP, ...]
    rows: int

    def __post_init__(self) -> None:
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "annihilator", tuple(self.annihilator))
        if self.rows < 1 or len(entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(entries)}")
        widths = {len(row) for row in entries}
        if len(widths) > 1:
            raise ValueError(f"ragged presentation matrix, row widths {sorted(widths)}")

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @classmethod
    def block_diagonal(
        cls,
        blocks: Sequence[Sequence[PolyP]],
        annihilator: Sequence[PolyP],
    ) -> "PresentationMatrix":
        """
        Presentation of the direct sum of R/b_k: block k puts each generator
        of b_k in its own column, in row k.
        """
        if not blocks:
            raise ValueError("need at least one block")
        template = next((g for block in blocks for g in block), None)
        if template is None:
            template = next(iter(annihilator))
        zero = PolyP.zero(template.variables, template.modulus)
        columns: list[list[PolyP]] = []
        for k, block in enumerate(blocks):
            for g in block:
                column = [zero] * len(blocks)
                column[k] = g
                columns.append(column)
        entries = tuple(tuple(col[i] for col in columns) for i in range(len(blocks)))
        return cls(entries, tuple(annihilator), len(blocks))

    def column(self, j: int) -> list[PolyP]:
        return [row[j] for row in self.entries]

    def cyclic_blocks(self) -> list[list[PolyP]]:
        """
        Per-row ideals of a block-diagonal matrix.

        Raises:
            ValueError: if some column has more than one nonzero entry
        """
        blocks: list[list[PolyP]] = [[] for _ in range(self.rows)]
        for j in range(self.cols):
            nonzero = [(i, f) for i, f in enumerate(self.column(j)) if not f.is_zero()]
            if len(nonzero) > 1:
                raise ValueError(f"column {j} has {len(nonzero)} nonzero entries; matrix is not block-diagonal")
            for i, f in nonzero:
                blocks[i].append(f)
        return blocks


def t_variable_names(ring: RingPresentation, m: int) -> tuple[str, ...]:
    names = tuple(f"T{i}" for i in range(1, m + 1))
    if set(names) & set(ring.variables):
        raise ValueError(f"ring already uses one of {names}")
    return names


def reduction_ideal(
    ring: RingPresentation,
    pm: PresentationMatrix,
) -> tuple[RingPresentation, list[PolyP]]:
    """
    The reduction ideal in S = R[T1..Tm].

    Returns:
        (extended ring, generators) where the generators are, in this order,
        the annihilator, one T-linear form per nonzero column, and all
        products T_i T_j with i <= j
    """
    for f in pm.annihilator:
        ring.check_poly(f)
    for row in pm.entries:
        for f in row:
            ring.check_poly(f)

    m = pm.rows
    ext = ring.extend(t_variable_names(ring, m))
    n = ring.nvars
    p = ring.characteristic

    def t_monomial(*indices: int) -> tuple[int, ...]:
        exps = [0] * (n + m)
        for i in indices:
            exps[n + i] += 1
        return tuple(exps)

    gens: list[PolyP] = [embed(f, ext.variables) for f in pm.annihilator]
    for j in range(pm.cols):
        form = PolyP.zero(ext.variables, p)
        for i, f in enumerate(pm.column(j)):
            if not f.is_zero():
                form = form + embed(f, ext.variables).mul_term(t_monomial(i))
        if not form.is_zero():
            gens.append(form)
    for i in range(m):
        for k in range(i, m):
            gens.append(PolyP.from_terms({t_monomial(i, k): 1}, ext.variables, p))
    logger.debug(f"Reduction ideal over {list(ext.variables)} with {len(gens)} generators")
    return ext, gens


@dataclass(frozen=True)
class ReductionRow:
    """Both sides of the colength identity at one Frobenius exponent"""

    e: int
    q: int
    lhs: int
    annihilator_length: int
    module_length: int
    rhs: int
    normalized_lhs: Fraction
    normalized_rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_reduction(
    ring: RingPresentation,
    pm: PresentationMatrix,
    e_list: Sequence[int],
) -> list[ReductionRow]:
    """
    Check lg_S(S/I^[q]) = q^m (lg(R/a^[q]) + HKF(M, e)) exactly for each e.

    Mismatches are reported in the rows, not raised. The normalized columns
    divide the left side by q^dim S and the bracket by q^dim R.

    Raises:
        ValueError: if pm is not block-diagonal
    """
    blocks = pm.cyclic_blocks()
    ext, gens = reduction_ideal(ring, pm)
    m = pm.rows
    rows: list[ReductionRow] = []
    for e in e_list:
        lhs_sample = hkf_ideal(ext, gens, e)
        q = lhs_sample.q
        annihilator_length = hkf_ideal(ring, pm.annihilator, e).length
        module_length = hkf_cyclic_module(ring, blocks, e)
        rhs = q ** m * (annihilator_length + module_length)
        row = ReductionRow(
            e=e,
            q=q,
            lhs=lhs_sample.length,
            annihilator_length=annihilator_length,
            module_length=module_length,
            rhs=rhs,
            normalized_lhs=Fraction(lhs_sample.length, q ** ext.dimension),
            normalized_rhs=Fraction(annihilator_length + module_length, q ** ring.dimension),
        )
        if not row.equal:
            logger.error(f"Reduction identity fails at e={e}: {row.lhs} != {row.rhs}")
        rows.append(row)
    return rows
