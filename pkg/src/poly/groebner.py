"""
Gröbner bases over prime fields and colength counting.

Buchberger's algorithm follows the Gebauer-Möller bookkeeping (Becker and
Weispfenning, GROEBNERNEWS2): new pairs are filtered with the coprime lead-term
and chain criteria, pairs are chosen by the normal strategy, and the result is
interreduced so the basis is reduced and monic.

Responsibility: GroebnerBasis value type, normal forms, ideal membership and
standard-monomial counting
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from ..exceptions import ArityMismatchError, InfiniteColengthError
from ..utils.dedupe import dedupe_by_key
from .monomial import Exponents, MonomialOrder
from .polynomial import PolyP

logger = logging.getLogger(__name__)


def _divides(m1: Exponents, m2: Exponents) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def _lcm(m1: Exponents, m2: Exponents) -> Exponents:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _quotient(m1: Exponents, m2: Exponents) -> Exponents:
    return tuple(a - b for a, b in zip(m1, m2))


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced, monic Gröbner basis sorted by ascending lead term.

    ``variables`` and ``modulus`` describe the ring so that an empty basis
    (the zero ideal) still knows where it lives.
    """

    generators: tuple[PolyP, ...]
    variables: tuple[str, ...]
    modulus: int
    order: MonomialOrder = MonomialOrder.GREVLEX
    lead_terms: tuple[Exponents, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(
            self,
            "lead_terms",
            tuple(g.leading_term(self.order)[0] for g in self.generators),
        )

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[PolyP]:
        return iter(self.generators)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_unit(self) -> bool:
        return any(not any(lead) for lead in self.lead_terms)

    def check_ring(self, f: PolyP) -> None:
        if f.variables != self.variables or f.modulus != self.modulus:
            raise ArityMismatchError(
                f"polynomial over F_{f.modulus}{list(f.variables)} does not match basis over "
                f"F_{self.modulus}{list(self.variables)}"
            )


# MARK: - Reduction


def _reduce(
    f: PolyP,
    basis: Sequence[PolyP],
    leads: Sequence[Exponents],
    order: MonomialOrder,
) -> PolyP:
    """
    Full reduction of f by monic polynomials with the given lead terms.

    The largest remaining term is always processed next; it is reduced by the
    first basis element whose lead divides it, otherwise moved to the
    remainder. Heap entries for cancelled terms are skipped when popped.
    """
    p = f.modulus
    work: dict[Exponents, int] = dict(f.terms)
    heap = [(order.heap_key(m), m) for m in work]
    heapq.heapify(heap)
    remainder: dict[Exponents, int] = {}
    tails = [
        [(mono, coeff) for mono, coeff in g.terms.items() if mono != lead]
        for g, lead in zip(basis, leads)
    ]

    while heap:
        _, mono = heapq.heappop(heap)
        coeff = work.pop(mono, None)
        if coeff is None:
            continue
        for index, lead in enumerate(leads):
            if _divides(lead, mono):
                break
        else:
            remainder[mono] = coeff
            continue
        shift = _quotient(mono, lead)
        for tail_mono, tail_coeff in tails[index]:
            target = tuple(a + b for a, b in zip(tail_mono, shift))
            value = (work.get(target, 0) - coeff * tail_coeff) % p
            if value:
                if target not in work:
                    heapq.heappush(heap, (order.heap_key(target), target))
                work[target] = value
            else:
                work.pop(target, None)

    return PolyP.from_terms(remainder, f.variables, p)


def normal_form(f: PolyP, G: GroebnerBasis) -> PolyP:
    """
    Normal form of f modulo G.

    No term of the result is divisible by a lead term of G and the result is
    congruent to f modulo the ideal. Deterministic: the largest reducible term
    is reduced first, by the first divisor in basis order.
    """
    G.check_ring(f)
    return _reduce(f, G.generators, G.lead_terms, G.order)


def s_polynomial(f: PolyP, g: PolyP, order: MonomialOrder = MonomialOrder.GREVLEX) -> PolyP:
    """lcm/LT(f)*f - lcm/LT(g)*g for the monic normalizations of f and g"""
    f, g = f.monic(order), g.monic(order)
    lf, _ = f.leading_term(order)
    lg, _ = g.leading_term(order)
    lcm = _lcm(lf, lg)
    return f.mul_term(_quotient(lcm, lf)) - g.mul_term(_quotient(lcm, lg))


def ideal_membership(f: PolyP, G: GroebnerBasis) -> bool:
    """True iff f lies in the ideal generated by G"""
    return normal_form(f, G).is_zero()


# MARK: - Buchberger


def _generator_key(f: PolyP) -> Optional[tuple]:
    if f.is_zero():
        return None
    return tuple(sorted(f.terms.items()))


def buchberger(
    gens: Sequence[PolyP],
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> GroebnerBasis:
    """
    Reduced Gröbner basis of the ideal generated by ``gens``.

    Args:
        gens: Nonempty list of polynomials over one ring F_p[x_1..x_n]
        order: Monomial order (grevlex by default)

    Returns:
        GroebnerBasis with monic generators sorted by ascending lead term.
        The unit ideal gives the basis {1}.

    Example:
        >>> G = buchberger(parse_poly_list(["X^2", "Y^3"], ["X", "Y"], 2))
        >>> count_standard_monomials(G)
        6
    """
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ring = gens[0]
    for g in gens[1:]:
        ring._check_same_ring(g)
    variables, p = ring.variables, ring.modulus

    def lead_of(f: PolyP) -> Exponents:
        return f.leading_term(order)[0]

    cleaned = dedupe_by_key((g.monic(order) for g in gens), _generator_key)
    if cleaned.removed:
        logger.debug(f"Dropped {cleaned.repeated} repeated and {cleaned.dropped} zero generators")
    monic = cleaned.unique
    if not monic:
        return GroebnerBasis((), variables, p, order)

    # initial interreduction until stable
    current = sorted(monic, key=lambda f: order.sort_key(lead_of(f)))
    while True:
        reduced: list[PolyP] = []
        for f in current:
            r = _reduce(f, reduced, [lead_of(g) for g in reduced], order)
            if r:
                reduced.append(r.monic(order))
        if reduced == current:
            break
        current = sorted(reduced, key=lambda f: order.sort_key(lead_of(f)))

    polys: list[PolyP] = []
    leads: list[Exponents] = []
    index_of: dict[PolyP, int] = {}

    def register(h: PolyP) -> int:
        if h not in index_of:
            index_of[h] = len(polys)
            polys.append(h)
            leads.append(lead_of(h))
        return index_of[h]

    def update(basis: set[int], pairs: set[tuple[int, int]], ih: int):
        mh = leads[ih]

        # new pairs (h, g): chain criterion against the other candidates
        candidates = sorted(basis)
        kept: list[tuple[int, int]] = []
        while candidates:
            ig = candidates.pop()
            lcm_hg = _lcm(mh, leads[ig])
            coprime = all(a == 0 or b == 0 for a, b in zip(mh, leads[ig]))

            def lcm_divides(ip: int) -> bool:
                return _divides(_lcm(mh, leads[ip]), lcm_hg)

            if coprime or (
                not any(lcm_divides(ix) for ix in candidates)
                and not any(lcm_divides(pair[1]) for pair in kept)
            ):
                kept.append((ih, ig))

        # coprime lead terms reduce to zero
        fresh = {
            (i, g) for i, g in kept
            if not all(a == 0 or b == 0 for a, b in zip(mh, leads[g]))
        }

        # old pairs survive unless h's lead strictly splits their lcm
        survivors: set[tuple[int, int]] = set()
        for ig1, ig2 in pairs:
            lcm12 = _lcm(leads[ig1], leads[ig2])
            if (
                not _divides(mh, lcm12)
                or _lcm(leads[ig1], mh) == lcm12
                or _lcm(leads[ig2], mh) == lcm12
            ):
                survivors.add((ig1, ig2))
        survivors |= fresh

        new_basis = {ig for ig in basis if not _divides(mh, leads[ig])}
        new_basis.add(ih)
        return new_basis, survivors

    pending = [register(f) for f in current]
    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for ih in sorted(pending, key=lambda i: order.sort_key(leads[i])):
        basis, pairs = update(basis, pairs, ih)

    processed = 0
    zero_reductions = 0
    while pairs:
        pair = min(
            pairs,
            key=lambda pr: (order.sort_key(_lcm(leads[pr[0]], leads[pr[1]])), pr),
        )
        pairs.remove(pair)
        processed += 1
        s = s_polynomial(polys[pair[0]], polys[pair[1]], order)
        divisors = sorted(basis, key=lambda i: order.sort_key(leads[i]))
        h = _reduce(s, [polys[i] for i in divisors], [leads[i] for i in divisors], order)
        if h:
            basis, pairs = update(basis, pairs, register(h.monic(order)))
        else:
            zero_reductions += 1

    # interreduce the final basis
    result: list[PolyP] = []
    for ig in sorted(basis):
        others = sorted(basis - {ig}, key=lambda i: order.sort_key(leads[i]))
        h = _reduce(polys[ig], [polys[i] for i in others], [leads[i] for i in others], order)
        if h:
            result.append(h.monic(order))

    result.sort(key=lambda f: order.sort_key(lead_of(f)))
    logger.debug(
        f"Buchberger: {processed} pairs processed, {zero_reductions} reduced to zero, "
        f"basis size {len(result)}"
    )
    return GroebnerBasis(tuple(result), variables, p, order)


# MARK: - Colength


def is_finite_colength(G: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the lead terms"""
    if G.is_unit():
        return True
    for i in range(G.nvars):
        if not any(
            lead[i] > 0 and all(a == 0 for j, a in enumerate(lead) if j != i)
            for lead in G.lead_terms
        ):
            return False
    return True


def _require_finite(G: GroebnerBasis) -> None:
    if not is_finite_colength(G):
        raise InfiniteColengthError(
            f"ideal over F_{G.modulus}{list(G.variables)} does not have finite colength"
        )


def count_leads_box(leads: Sequence[Exponents], nvars: int) -> int:
    """
    Number of exponent vectors divisible by none of ``leads``.

    Depth-first over the box: the first n-1 coordinates are enumerated, each
    only while some standard monomial remains, and the last coordinate is
    counted directly as the smallest last exponent among the leads whose
    prefix divides the current prefix. Callers guarantee finiteness.
    """
    if nvars == 0:
        return 0 if leads else 1
    last = nvars - 1

    def walk(k: int, active: list[Exponents]) -> int:
        if k == last:
            return min(lead[last] for lead in active)
        total = 0
        a = 0
        while True:
            narrowed = [lead for lead in active if lead[k] <= a]
            count = walk(k + 1, narrowed)
            if count == 0:
                return total
            total += count
            a += 1

    return walk(0, [lead for lead in leads])


def count_standard_monomials(G: GroebnerBasis) -> int:
    """
    Length of F_p[x]/(G) as the number of standard monomials.

    Raises:
        InfiniteColengthError: if the quotient is not Artinian
    """
    _require_finite(G)
    count = count_leads_box(G.lead_terms, G.nvars)
    logger.debug(f"Counted {count} standard monomials for basis of size {len(G)}")
    return count


def standard_monomials(G: GroebnerBasis) -> Iterator[Exponents]:
    """Yield the standard monomials of a finite-colength basis in lex order"""
    _require_finite(G)
    leads = G.lead_terms
    n = G.nvars

    def walk(prefix: tuple[int, ...], active: list[Exponents]) -> Iterator[Exponents]:
        k = len(prefix)
        if k == n:
            yield prefix
            return
        a = 0
        while True:
            narrowed = [lead for lead in active if lead[k] <= a]
            # a lead that is fully divided by the prefix blocks this branch
            if any(all(x == 0 for x in lead[k + 1:]) for lead in narrowed):
                return
            yield from walk(prefix + (a,), narrowed)
            a += 1

    if n == 0:
        if not leads:
            yield ()
        return
    yield from walk((), list(leads))
