"""
Sparse multivariate polynomials over the integers and over prime fields.

Terms are stored as ``{exponent tuple: coefficient}`` with no zero entries.
``PolyZ`` keeps arbitrary-precision integer coefficients, ``PolyP`` keeps
residues in [1, p-1] for a prime p < 2^62. Values are treated as immutable.

Responsibility: Polynomial value types, ring arithmetic, reduction mod p,
Frobenius powers and formal derivatives
"""

from __future__ import annotations

import logging
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, TypeVar, Union

from sympy import isprime

from ..config import settings
from ..exceptions import ArityMismatchError, NotPrimeError, NotPrimePowerError
from .monomial import Exponents, MonomialOrder, check_exponents

logger = logging.getLogger(__name__)

P = TypeVar("P", bound="SparsePolynomial")


@lru_cache(maxsize=4096)
def check_modulus(p: int) -> int:
    """Return p if it is a prime below the configured bound"""
    if not isinstance(p, int) or p < 2 or p >= settings.compute.max_modulus or not isprime(p):
        raise NotPrimeError(f"modulus {p} is not a prime below {settings.compute.max_modulus}")
    return p


def _format_term(coeff: int, exponents: Exponents, variables: Sequence[str]) -> str:
    factors = [
        name if a == 1 else f"{name}^{a}"
        for name, a in zip(variables, exponents)
        if a
    ]
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    if coeff == -1:
        return "-" + "*".join(factors)
    return f"{coeff}*" + "*".join(factors)


class SparsePolynomial:
    """
    Shared behaviour of ``PolyZ`` and ``PolyP``.

    Subclasses decide how coefficients are normalized and how a new value of
    the same ring is built.
    """

    __slots__ = ("_terms", "variables")

    _terms: dict[Exponents, int]
    variables: tuple[str, ...]

    def _normalize(self, coeff: int) -> int:
        raise NotImplementedError

    def _new(self: P, terms: dict[Exponents, int]) -> P:
        raise NotImplementedError

    def _ring(self) -> tuple:
        return (type(self), self.variables)

    def _check_same_ring(self, other: "SparsePolynomial") -> None:
        if self._ring() != other._ring():
            raise ArityMismatchError(
                f"polynomials over different rings: {self._ring()} vs {other._ring()}"
            )

    # MARK: - Accessors

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial"""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    def leading_term(self, order: MonomialOrder = MonomialOrder.GREVLEX) -> tuple[Exponents, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        lead = max(self._terms, key=order.sort_key)
        return lead, self._terms[lead]

    def sorted_terms(self, order: MonomialOrder = MonomialOrder.GREVLEX) -> list[tuple[Exponents, int]]:
        """Terms from largest to smallest"""
        return sorted(self._terms.items(), key=lambda item: order.sort_key(item[0]), reverse=True)

    # MARK: - Arithmetic

    def _coerce(self, other: object):
        if isinstance(other, SparsePolynomial):
            self._check_same_ring(other)
            return other
        if isinstance(other, int):
            return self.constant_like(other)
        return NotImplemented

    def constant_like(self: P, value: int) -> P:
        value = self._normalize(value)
        terms = {(0,) * self.nvars: value} if value else {}
        return self._new(terms)

    def __add__(self: P, other: object) -> P:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = self._normalize(terms.get(mono, 0) + coeff)
            if value:
                terms[mono] = value
            else:
                terms.pop(mono, None)
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self: P) -> P:
        return self._new({m: self._normalize(-c) for m, c in self._terms.items()})

    def __sub__(self: P, other: object) -> P:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self: P, other: object) -> P:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def _degree_bounds(self) -> Exponents:
        """Largest exponent of each variable over all terms"""
        return tuple(max(col, default=0) for col in zip(*self._terms)) if self._terms else (0,) * self.nvars

    def __mul__(self: P, other: object) -> P:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._terms and other._terms:
            # the coordinatewise max of the product is the sum of the factor maxima
            check_exponents(a + b for a, b in zip(self._degree_bounds(), other._degree_bounds()))
        terms: dict[Exponents, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return self._new({m: c for m, c in ((m, self._normalize(c)) for m, c in terms.items()) if c})

    __rmul__ = __mul__

    def mul_term(self: P, exponents: Exponents, coeff: int = 1) -> P:
        """Multiply by the single term coeff * x^exponents"""
        if self._terms:
            check_exponents(a + b for a, b in zip(self._degree_bounds(), exponents))
        terms = {}
        for mono, c in self._terms.items():
            value = self._normalize(c * coeff)
            if value:
                terms[tuple(a + b for a, b in zip(mono, exponents))] = value
        return self._new(terms)

    def __pow__(self: P, exponent: int) -> P:
        """Repeated squaring"""
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self.constant_like(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # MARK: - Equality and display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == self.constant_like(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._ring() == other._ring() and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._ring(), frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.sorted_terms():
            text = _format_term(coeff, mono, self.variables)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class PolyZ(SparsePolynomial):
    """Polynomial with integer coefficients"""

    __slots__ = ()

    def __init__(self, terms: Mapping[Exponents, int], variables: Sequence[str]):
        self.variables = tuple(variables)
        clean: dict[Exponents, int] = {}
        for mono, coeff in terms.items():
            if len(mono) != len(self.variables):
                raise ArityMismatchError(f"term {mono} does not match variables {self.variables}")
            if coeff:
                clean[check_exponents(mono)] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "PolyZ":
        return cls({}, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "PolyZ":
        variables = tuple(variables)
        index = variables.index(name)
        return cls({tuple(int(i == index) for i in range(len(variables))): 1}, variables)

    def _normalize(self, coeff: int) -> int:
        return coeff

    def _new(self, terms: dict[Exponents, int]) -> "PolyZ":
        poly = PolyZ.__new__(PolyZ)
        poly.variables = self.variables
        poly._terms = terms
        return poly

    def reduce_mod_p(self, p: int) -> "PolyP":
        return reduce_mod_p(self, p)


class PolyP(SparsePolynomial):
    """Polynomial with coefficients in the prime field F_p"""

    __slots__ = ("modulus",)

    modulus: int

    def __init__(self, terms: Mapping[Exponents, int], variables: Sequence[str], modulus: int):
        self.variables = tuple(variables)
        self.modulus = check_modulus(modulus)
        clean: dict[Exponents, int] = {}
        for mono, coeff in terms.items():
            if len(mono) != len(self.variables):
                raise ArityMismatchError(f"term {mono} does not match variables {self.variables}")
            value = coeff % modulus
            if value:
                clean[check_exponents(mono)] = value
        self._terms = clean

    @classmethod
    def from_terms(cls, terms: dict[Exponents, int], variables: tuple[str, ...], modulus: int) -> "PolyP":
        """Trusted constructor for already-normalized terms"""
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.modulus = modulus
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, variables: Sequence[str], modulus: int) -> "PolyP":
        return cls({}, variables, modulus)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str], modulus: int) -> "PolyP":
        return reduce_mod_p(PolyZ.variable(name, variables), modulus)

    @property
    def characteristic(self) -> int:
        return self.modulus

    def _ring(self) -> tuple:
        return (PolyP, self.variables, self.modulus)

    def _normalize(self, coeff: int) -> int:
        return coeff % self.modulus

    def _new(self, terms: dict[Exponents, int]) -> "PolyP":
        return PolyP.from_terms(terms, self.variables, self.modulus)

    def monic(self, order: MonomialOrder = MonomialOrder.GREVLEX) -> "PolyP":
        if not self._terms:
            return self
        _, lc = self.leading_term(order)
        inv = pow(lc, -1, self.modulus)
        return self._new({m: (c * inv) % self.modulus for m, c in self._terms.items()})


Polynomial = Union[PolyZ, PolyP]


def reduce_mod_p(f: PolyZ, p: int) -> PolyP:
    """
    Reduce an integer polynomial modulo a prime.

    Raises:
        NotPrimeError: if p is not a prime below 2^62
    """
    check_modulus(p)
    terms = {m: c % p for m, c in f.terms.items() if c % p}
    return PolyP.from_terms(terms, f.variables, p)


def partial_derivative(f: P, index: int) -> P:
    """Formal partial derivative with respect to variable ``index``"""
    if not 0 <= index < f.nvars:
        raise IndexError(f"variable index {index} out of range for {f.variables}")
    terms: dict[Exponents, int] = {}
    for mono, coeff in f.terms.items():
        a = mono[index]
        if a == 0:
            continue
        value = f._normalize(coeff * a)
        if value:
            terms[mono[:index] + (a - 1,) + mono[index + 1:]] = value
    return f._new(terms)


def is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def frobenius_power(gens: Iterable[PolyP], q: int) -> list[PolyP]:
    """
    Frobenius power I^[q]: every generator raised to the q-th power.

    Single-term generators scale their exponents; others use repeated
    squaring.

    Raises:
        NotPrimePowerError: if q is not a power of the ring characteristic
    """
    gens = list(gens)
    result: list[PolyP] = []
    for g in gens:
        if not is_power_of(q, g.modulus):
            raise NotPrimePowerError(f"q={q} is not a power of p={g.modulus}")
        if len(g) == 1:
            (mono, coeff), = g.terms.items()
            scaled = check_exponents(a * q for a in mono)
            result.append(PolyP.from_terms({scaled: pow(coeff, q, g.modulus)}, g.variables, g.modulus))
        else:
            result.append(g ** q)
    logger.debug(f"Frobenius power q={q} of {len(gens)} generators")
    return result
