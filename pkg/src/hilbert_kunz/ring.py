"""
Quotient ring presentations R = F_p[x_1..x_n]/(relations).

Responsibility: Ring description shared by colength computations
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..exceptions import ArityMismatchError
from ..poly import PolyP, check_exponents, parse_poly_list
from ..poly.polynomial import check_modulus


@dataclass(frozen=True)
class RingPresentation:
    """
    Standard-graded quotient of a polynomial ring over F_p.

    ``dimension`` is supplied by the caller; when omitted it is taken as the
    variable count minus the number of relations (complete intersections).
    """

    characteristic: int
    variables: tuple[str, ...]
    relations: tuple[PolyP, ...] = ()
    dimension: Optional[int] = None

    def __post_init__(self) -> None:
        check_modulus(self.characteristic)
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "relations", tuple(self.relations))
        for rel in self.relations:
            self.check_poly(rel)
        if self.dimension is None:
            object.__setattr__(self, "dimension", len(self.variables) - len(self.relations))
        if self.dimension < 0:
            raise ValueError(f"ring dimension must be nonnegative, got {self.dimension}")

    @classmethod
    def polynomial_ring(cls, p: int, variables: Sequence[str]) -> "RingPresentation":
        return cls(p, tuple(variables))

    @classmethod
    def from_strings(
        cls,
        p: int,
        variables: Sequence[str],
        relations: Sequence[str] = (),
        dimension: Optional[int] = None,
    ) -> "RingPresentation":
        return cls(p, tuple(variables), tuple(parse_poly_list(relations, variables, p)), dimension)

    @classmethod
    def quadric(cls, p: int = 2) -> "RingPresentation":
        """F_p[X,Y,Z,W]/(XY - ZW), the cone over P^1 x P^1"""
        return cls.from_strings(p, ("X", "Y", "Z", "W"), ["X*Y - Z*W"], dimension=3)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def check_poly(self, f: PolyP) -> None:
        if f.variables != self.variables or f.modulus != self.characteristic:
            raise ArityMismatchError(
                f"polynomial over F_{f.modulus}{list(f.variables)} is not in "
                f"F_{self.characteristic}{list(self.variables)}"
            )

    def parse(self, texts: Sequence[str]) -> list[PolyP]:
        return parse_poly_list(texts, self.variables, self.characteristic)

    def extend(self, names: Sequence[str]) -> "RingPresentation":
        """Adjoin new variables; relations are embedded, dimension grows by their count"""
        names = tuple(names)
        clash = set(names) & set(self.variables)
        if clash:
            raise ValueError(f"variables {sorted(clash)} already exist in the ring")
        variables = self.variables + names
        relations = tuple(embed(rel, variables) for rel in self.relations)
        return RingPresentation(self.characteristic, variables, relations, self.dimension + len(names))


def embed(f: PolyP, variables: tuple[str, ...]) -> PolyP:
    """View f in a ring whose variables extend f's by trailing new ones"""
    if variables[: f.nvars] != f.variables:
        raise ArityMismatchError(f"{list(variables)} does not extend {list(f.variables)}")
    pad = (0,) * (len(variables) - f.nvars)
    terms = {check_exponents(mono + pad): coeff for mono, coeff in f.terms.items()}
    return PolyP.from_terms(terms, variables, f.modulus)
