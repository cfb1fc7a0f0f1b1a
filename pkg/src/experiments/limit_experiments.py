"""
Asymptotic limit experiments.

Responsibility: limit-splitting, limit-oracle and chern-check
"""

from __future__ import annotations

from fractions import Fraction

from ..arith import QuadNum
from ..asymptotics import (
    BettiTable,
    ConvergenceReport,
    ConvergenceRow,
    SplitBundle,
    SurfaceData,
    betti_term,
    boundary_slope,
    chern_resolution,
    cotangent_c2,
    h1_limit,
    h1_sum_oracle,
    h1_z_limit,
    h1_z_sum_oracle,
    irrationality_witness,
    limit_top,
    normalize_orthogonal,
    oracle_convergence,
    surface_splitting_hk,
)
from ..lattice import DivClass, antiample_threshold
from ..models import ChernCheckParams, Command, LimitOracleParams, LimitSplittingParams, OracleKind, SurfaceName
from ..orchestration.fanout import fanout_map
from ..utils.formatting import format_exact, to_decimal_string
from .base_experiment import BaseExperiment, ExperimentOutcome

ORACLE_COLUMNS = ["n", "oracle_value_num", "oracle_value_den", "limit_decimal_50digits", "scaled_gap_approx"]


def surface_for(name: SurfaceName) -> SurfaceData:
    if name == SurfaceName.K3_QUARTIC:
        return SurfaceData.k3_quartic()
    return SurfaceData.p1xp1()


def _h1_task(task: tuple[SurfaceData, DivClass, QuadNum, int, bool]) -> Fraction:
    surface, D, u, n, over_z = task
    oracle = h1_z_sum_oracle if over_z else h1_sum_oracle
    return oracle(surface, D, u, n)


class LimitSplittingExperiment(BaseExperiment[LimitSplittingParams]):
    """HK multiplicity of a split syzygy bundle on a surface"""

    command = Command.LIMIT_SPLITTING
    params_model = LimitSplittingParams

    def compute(self, params: LimitSplittingParams) -> ExperimentOutcome:
        surface = surface_for(params.surface)
        summands = [DivClass(tuple(coords)) for coords in params.summands]
        surface.lattice.check(*summands)
        bundle = SplitBundle.on_surface(surface, summands)
        table = BettiTable.from_mapping(params.betti)
        value = surface_splitting_hk(surface, bundle, table)

        outcome = ExperimentOutcome(columns=["L", "threshold", "contribution", "contribution_approx"])
        for L, b, mixed in zip(bundle.summands, bundle.thresholds, bundle.intersections(surface)):
            part = limit_top(2, b, mixed)
            outcome.rows.append({
                "L": surface.lattice.label(L),
                "threshold": format_exact(b),
                "contribution": format_exact(part),
                "contribution_approx": to_decimal_string(part),
            })
            l2, hl, h2 = mixed
            if irrationality_witness(b, h2, hl, l2):
                outcome.notes.append(f"summand {surface.lattice.label(L)} contributes an irrational limit")

        outcome.exact["betti_term"] = format_exact(betti_term(2, surface.h2, table))
        outcome.exact["hk_multiplicity"] = format_exact(value)
        outcome.approx["hk_multiplicity"] = to_decimal_string(value)
        return outcome


class LimitOracleExperiment(BaseExperiment[LimitOracleParams]):
    """Exact Riemann sums against their closed-form limit"""

    command = Command.LIMIT_ORACLE
    params_model = LimitOracleParams

    def compute(self, params: LimitOracleParams) -> ExperimentOutcome:
        surface = surface_for(params.surface)
        lat, H = surface.lattice, surface.H

        if params.kind == OracleKind.SUM:
            L = DivClass(tuple(params.L))
            lat.check(L)
            b = antiample_threshold(lat, H, L)
            report = oracle_convergence(surface, L, b, params.ns, jobs=self.jobs)
            subject = f"threshold {format_exact(b)} of {lat.label(L)}"
        else:
            raw = DivClass(tuple(params.D)) if params.D is not None else lat.basis(1)
            lat.check(raw)
            D = normalize_orthogonal(lat, H, raw)
            u = boundary_slope(lat, H, D)
            over_z = params.kind == OracleKind.H1_Z
            limit = h1_z_limit(lat, H, D) if over_z else h1_limit(lat, H, D)
            values = fanout_map(_h1_task, [(surface, D, u, n, over_z) for n in params.ns], self.jobs)
            report = ConvergenceReport(
                limit,
                tuple(ConvergenceRow(n, v, abs(limit - v) * n) for n, v in zip(params.ns, values)),
            )
            subject = f"slope {format_exact(u)} of {lat.label(D)}"

        limit_text = to_decimal_string(report.limit, 50)
        outcome = ExperimentOutcome(columns=list(ORACLE_COLUMNS))
        for row in report.rows:
            outcome.rows.append({
                "n": row.n,
                "oracle_value_num": row.value.numerator,
                "oracle_value_den": row.value.denominator,
                "limit_decimal_50digits": limit_text,
                "scaled_gap_approx": to_decimal_string(row.scaled_gap, 12),
            })
        outcome.exact["limit"] = format_exact(report.limit)
        outcome.exact["empirical_constant"] = format_exact(report.constant)
        outcome.approx["empirical_constant"] = to_decimal_string(report.constant, 12)
        outcome.notes.append(f"{params.kind.value} oracle for the {subject}")
        outcome.notes.append("empirical_constant is max |oracle - limit| * n over the rows; reported, not asserted")
        return outcome


class ChernCheckExperiment(BaseExperiment[ChernCheckParams]):
    """Chern classes of the resolution bundle, each checked against its identity"""

    command = Command.CHERN_CHECK
    params_model = ChernCheckParams

    def compute(self, params: ChernCheckParams) -> ExperimentOutcome:
        outcome = ExperimentOutcome(columns=["delta", "c1", "degree", "c2", "cotangent_c2"])
        for delta in params.deltas:
            c1, degree, c2 = chern_resolution(delta)
            outcome.rows.append({
                "delta": delta,
                "c1": c1,
                "degree": degree,
                "c2": c2,
                "cotangent_c2": cotangent_c2(delta),
            })
        outcome.exact["identity"] = "1 - 8t + 24t^2 mod t^3"
        return outcome
