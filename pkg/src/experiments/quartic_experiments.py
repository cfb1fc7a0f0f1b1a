"""
Determinantal quartic experiments.

Responsibility: quartic-det, quartic-scan and quartic-minors
"""

from __future__ import annotations

from sympy import isprime

from ..determinantal import (
    VARIABLES,
    curve_lies_on_surface,
    curve_minors,
    det4,
    laplace_first_column,
    minors_match_up_to_sign,
    parse_linear_matrix,
    singular_prime_scan,
)
from ..models import Command, QuarticDetParams, QuarticMinorsParams, QuarticScanParams
from ..poly import MonomialOrder, PolyZ, parse_poly
from .base_experiment import BaseExperiment, ExperimentOutcome


class QuarticDetExperiment(BaseExperiment[QuarticDetParams]):
    """Integer determinant of a 4x4 linear matrix, term by term"""

    command = Command.QUARTIC_DET
    params_model = QuarticDetParams

    def compute(self, params: QuarticDetParams) -> ExperimentOutcome:
        F = det4(parse_linear_matrix(params.matrix))
        outcome = ExperimentOutcome(columns=["monomial", "coefficient"])
        for exponents, coeff in F.sorted_terms(MonomialOrder.GREVLEX):
            outcome.rows.append({
                "monomial": str(PolyZ({exponents: 1}, VARIABLES)),
                "coefficient": coeff,
            })
        outcome.exact["det"] = str(F)
        outcome.exact["terms"] = str(len(F))
        if params.expected_det is not None:
            expected = parse_poly(params.expected_det, VARIABLES)
            if F != expected:
                outcome.mismatches.append(f"determinant {F} differs from the expected {expected}")
            else:
                outcome.notes.append("determinant agrees term for term with the expected quartic")
        return outcome


class QuarticScanExperiment(BaseExperiment[QuarticScanParams]):
    """Primes p at which V+(det A) is singular over F_p"""

    command = Command.QUARTIC_SCAN
    params_model = QuarticScanParams

    def compute(self, params: QuarticScanParams) -> ExperimentOutcome:
        F = det4(parse_linear_matrix(params.matrix))
        primes = sorted({p for p in params.primes if isprime(p)})
        singular = singular_prime_scan(F, primes, jobs=self.jobs)
        singular_set = set(singular)

        outcome = ExperimentOutcome(columns=["p", "smooth"], tasks_attempted=len(primes))
        for p in primes:
            outcome.rows.append({"p": p, "smooth": p not in singular_set})
        outcome.exact["singular"] = " ".join(str(p) for p in singular)
        outcome.exact["primes_checked"] = str(len(primes))

        if params.known_singular is not None:
            expected = sorted(p for p in params.known_singular if p in set(primes))
            if singular != expected:
                outcome.mismatches.append(f"singular primes {singular} differ from the published {expected}")
            beyond = [p for p in params.known_singular if primes and p > primes[-1]]
            if beyond:
                outcome.notes.append(f"published singular primes beyond the scan: {' '.join(map(str, beyond))}")
        return outcome


class QuarticMinorsExperiment(BaseExperiment[QuarticMinorsParams]):
    """Curve minors, the Laplace identity and membership of det A in their ideal"""

    command = Command.QUARTIC_MINORS
    params_model = QuarticMinorsParams

    def compute(self, params: QuarticMinorsParams) -> ExperimentOutcome:
        matrix = parse_linear_matrix(params.matrix)
        F = det4(matrix)
        minors = curve_minors(matrix)
        expected = (
            [parse_poly(text, VARIABLES) for text in params.expected_minors]
            if params.expected_minors is not None
            else None
        )

        outcome = ExperimentOutcome(columns=["i", "minor", "matches_expected"])
        for i, minor in enumerate(minors):
            match = ""
            if expected is not None and i < len(expected):
                match = minor == expected[i] or minor == -expected[i]
            outcome.rows.append({"i": i + 1, "minor": str(minor), "matches_expected": match})

        if laplace_first_column(matrix, minors) != F:
            outcome.mismatches.append("sum A[i][0] * minor_i differs from det A")
        else:
            outcome.exact["laplace_identity"] = "holds"
        if expected is not None and not minors_match_up_to_sign(minors, expected):
            outcome.mismatches.append("minors do not match the expected curve generators up to sign")

        primes = sorted({p for p in params.primes if isprime(p)})
        on_surface = [p for p in primes if curve_lies_on_surface(matrix, p)]
        if on_surface != primes:
            missing = sorted(set(primes) - set(on_surface))
            outcome.mismatches.append(f"det A is not in the minor ideal mod {missing}")
        outcome.exact["on_surface_mod"] = " ".join(str(p) for p in on_surface)
        return outcome
