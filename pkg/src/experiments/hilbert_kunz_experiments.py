"""
Hilbert-Kunz experiments: colength series, the reduction identity and the
two-path monomial check.

Responsibility: hk-ideal, hk-reduce and hk-monomial
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exceptions import ExperimentUsageError
from ..hilbert_kunz import (
    PresentationMatrix,
    RingPresentation,
    hk_estimate,
    hk_series,
    hkf_ideal,
    monomial_hk_exact,
    quadric_closed_form,
    staircase_count,
    verify_reduction,
)
from ..models import Command, HKIdealParams, HKMonomialParams, HKReduceParams
from ..poly import expand_juxtaposition, parse_poly, reduce_mod_p
from ..utils.formatting import format_exact, to_decimal_string
from .base_experiment import BaseExperiment, ExperimentOutcome


def _expand_all(texts: Sequence[str], variables: Sequence[str]) -> list[str]:
    return [expand_juxtaposition(text, variables) for text in texts]


class HKIdealExperiment(BaseExperiment[HKIdealParams]):
    """lg(R/I^[q]) and lg/q^dim for each e"""

    command = Command.HK_IDEAL
    params_model = HKIdealParams

    def compute(self, params: HKIdealParams) -> ExperimentOutcome:
        ring = RingPresentation.from_strings(
            params.p,
            params.variables,
            _expand_all(params.relations, params.variables),
            params.dimension,
        )
        gens = ring.parse(_expand_all(params.ideal, params.variables))
        series = hk_series(ring, gens, params.e_max, jobs=self.jobs, e_min=params.e_min)

        outcome = ExperimentOutcome(columns=["e", "q", "length", "ratio"])
        if params.compare_closed_form:
            outcome.columns.append("closed_form")
            outcome.notes.append("closed_form is the conjectural (4q^3 - q)/3, shown for comparison only")
        for sample in series.samples:
            row = {
                "e": sample.e,
                "q": sample.q,
                "length": sample.length,
                "ratio": format_exact(Fraction(sample.length, sample.q ** ring.dimension)),
            }
            if params.compare_closed_form:
                row["closed_form"] = format_exact(quadric_closed_form(sample.q))
            outcome.rows.append(row)

        outcome.exact["dimension"] = str(ring.dimension)
        if len(series.samples) >= 2:
            estimate = hk_estimate(series)
            outcome.exact["ratio_at_max"] = format_exact(estimate.ratio_at_max)
            outcome.exact["difference_estimate"] = format_exact(estimate.difference_estimate)
            outcome.approx["ratio_at_max"] = to_decimal_string(estimate.ratio_at_max)
            outcome.approx["difference_estimate"] = to_decimal_string(estimate.difference_estimate)
        return outcome


class HKReduceExperiment(BaseExperiment[HKReduceParams]):
    """Exact check of lg_S(S/I^[q]) = q^m (lg(R/a^[q]) + HKF(M, e))"""

    command = Command.HK_REDUCE
    params_model = HKReduceParams

    def compute(self, params: HKReduceParams) -> ExperimentOutcome:
        ring = RingPresentation.polynomial_ring(params.p, params.variables)
        blocks = [ring.parse(_expand_all(block, params.variables)) for block in params.blocks]
        annihilator = ring.parse(_expand_all(params.annihilator or [], params.variables))
        pm = PresentationMatrix.block_diagonal(blocks, annihilator)

        outcome = ExperimentOutcome(columns=[
            "e", "q", "lhs", "annihilator_length", "module_length", "rhs",
            "normalized_lhs", "normalized_rhs", "equal",
        ])
        for row in verify_reduction(ring, pm, params.e_list):
            outcome.rows.append({
                "e": row.e,
                "q": row.q,
                "lhs": row.lhs,
                "annihilator_length": row.annihilator_length,
                "module_length": row.module_length,
                "rhs": row.rhs,
                "normalized_lhs": format_exact(row.normalized_lhs),
                "normalized_rhs": format_exact(row.normalized_rhs),
                "equal": row.equal,
            })
            if not row.equal:
                outcome.mismatches.append(f"e={row.e}: lhs {row.lhs} != rhs {row.rhs}")
        outcome.exact["summands"] = str(pm.rows)
        return outcome


class HKMonomialExperiment(BaseExperiment[HKMonomialParams]):
    """Gröbner colength against the direct staircase count, plus the exact volume"""

    command = Command.HK_MONOMIAL
    params_model = HKMonomialParams

    def compute(self, params: HKMonomialParams) -> ExperimentOutcome:
        n = len(params.variables)
        polys = [parse_poly(text, params.variables) for text in _expand_all(params.monomials, params.variables)]
        exponents = []
        for text, f in zip(params.monomials, polys):
            if len(f) != 1 or next(iter(f.terms.values())) != 1:
                raise ExperimentUsageError(f"{text!r} is not a monic monomial")
            exponents.append(next(iter(f.terms)))

        ring = RingPresentation.polynomial_ring(params.p, params.variables)
        gens = [reduce_mod_p(f, params.p) for f in polys]
        outcome = ExperimentOutcome(columns=["e", "q", "groebner_length", "staircase_length", "ratio"])
        for e in params.e_list:
            sample = hkf_ideal(ring, gens, e)
            direct = staircase_count(exponents, n, sample.q)
            outcome.rows.append({
                "e": e,
                "q": sample.q,
                "groebner_length": sample.length,
                "staircase_length": direct,
                "ratio": format_exact(Fraction(direct, sample.q ** n)),
            })
            if sample.length != direct:
                outcome.mismatches.append(f"q={sample.q}: Gröbner {sample.length} != staircase {direct}")

        volume = monomial_hk_exact(exponents, n)
        outcome.exact["hk_multiplicity"] = format_exact(volume)
        return outcome
