"""
Néron-Severi lattice experiments.

Responsibility: cone-threshold, cone-orbit and cone-represents
"""

from __future__ import annotations

from typing import Sequence

from ..asymptotics import irrationality_witness, limit_surface
from ..lattice import (
    DivClass,
    GramLattice,
    ample_threshold,
    antiample_threshold,
    fibonacci_orbit,
    inverse_orbit,
    pair,
    positive_boundary,
    preserves_pairings,
    represents,
    twisted_square,
    two_adic_obstruction,
)
from ..models import Command, ConeOrbitParams, ConeRepresentsParams, ConeThresholdParams
from ..models.experiment_models import LatticeParams
from ..utils.formatting import format_exact, to_decimal_string
from .base_experiment import BaseExperiment, ExperimentOutcome


def _lattice(params: LatticeParams) -> GramLattice:
    return GramLattice.from_descriptor({"gram": params.gram, "labels": params.labels})


def _divisor(lat: GramLattice, coords: Sequence[int]) -> DivClass:
    divisor = DivClass(tuple(coords))
    lat.check(divisor)
    return divisor


class ConeThresholdExperiment(BaseExperiment[ConeThresholdParams]):
    """Positive-cone boundary of the (H, D) plane and thresholds of each L"""

    command = Command.CONE_THRESHOLD
    params_model = ConeThresholdParams

    def compute(self, params: ConeThresholdParams) -> ExperimentOutcome:
        lat = _lattice(params)
        H = _divisor(lat, params.H)
        outcome = ExperimentOutcome(
            columns=["L", "L2", "HL", "antiample", "ample", "limit", "limit_approx"],
        )

        if params.D is not None:
            boundary = positive_boundary(lat, H, _divisor(lat, params.D))
            outcome.exact["boundary_lower"] = format_exact(boundary.lower)
            outcome.exact["boundary_upper"] = format_exact(boundary.upper)
            outcome.approx["boundary_lower"] = to_decimal_string(boundary.lower)
            outcome.approx["boundary_upper"] = to_decimal_string(boundary.upper)

        thresholds = []
        for coords in params.L:
            L = _divisor(lat, coords)
            b = antiample_threshold(lat, H, L)
            a = ample_threshold(lat, H, L)
            if twisted_square(lat, H, L, b) != 0:
                outcome.mismatches.append(f"(bH + L)^2 != 0 for L = {lat.label(L)}, b = {b}")
            if a != -antiample_threshold(lat, H, -L):
                outcome.mismatches.append(f"a(L) != -b(-L) for L = {lat.label(L)}")
            h2, hl, l2 = pair(lat, H, H), pair(lat, H, L), pair(lat, L, L)
            limit = limit_surface(b, h2, hl, l2)
            outcome.rows.append({
                "L": lat.label(L),
                "L2": l2,
                "HL": hl,
                "antiample": format_exact(b),
                "ample": format_exact(a),
                "limit": format_exact(limit),
                "limit_approx": to_decimal_string(limit),
            })
            if irrationality_witness(b, h2, hl, l2):
                outcome.notes.append(f"limit for {lat.label(L)} has a nonzero sqrt({limit.d}) component")
            thresholds.append(format_exact(b))
        if thresholds:
            outcome.exact["thresholds"] = ", ".join(thresholds)
        return outcome


class ConeOrbitExperiment(BaseExperiment[ConeOrbitParams]):
    """Iterates of an isometry on a starting class, with slopes closing in on the boundary"""

    command = Command.CONE_ORBIT
    params_model = ConeOrbitParams

    def compute(self, params: ConeOrbitParams) -> ExperimentOutcome:
        lat = _lattice(params)
        start = _divisor(lat, params.start) if params.start is not None else lat.basis(0)
        walk = inverse_orbit if params.inverse else fibonacci_orbit
        steps = walk(lat, params.matrix, start, params.steps)

        outcome = ExperimentOutcome(columns=["step", "divisor", "self_intersection", "gap", "gap_approx"])
        for step in steps:
            outcome.rows.append({
                "step": step.step,
                "divisor": lat.label(step.divisor),
                "self_intersection": step.self_intersection,
                "gap": format_exact(step.gap) if step.gap is not None else "",
                "gap_approx": to_decimal_string(step.gap, 12) if step.gap is not None else "",
            })

        squares = {step.self_intersection for step in steps}
        if len(squares) != 1:
            outcome.mismatches.append(f"self-intersections along the orbit vary: {sorted(squares)}")
        basis = [lat.basis(i) for i in range(lat.rank)]
        if not preserves_pairings(lat, params.matrix, basis, params.steps):
            outcome.mismatches.append(f"M^{params.steps} does not preserve the pairing")
        outcome.exact["self_intersection"] = str(steps[0].self_intersection)
        outcome.exact["isometry"] = "true"
        return outcome


class ConeRepresentsExperiment(BaseExperiment[ConeRepresentsParams]):
    """Bounded search for Q(n1, n2) = c m^2"""

    command = Command.CONE_REPRESENTS
    params_model = ConeRepresentsParams

    def compute(self, params: ConeRepresentsParams) -> ExperimentOutcome:
        lat = _lattice(params)
        # the 2-adic test is specific to 4(n1^2 + n1 n2 - n2^2)
        quartic = lat.gram == GramLattice.quartic_plane().gram
        outcome = ExperimentOutcome(columns=["c", "witness", "two_adic_obstruction"])
        for c in params.c:
            witness = represents(lat, c, params.m_bound, params.n_bound)
            outcome.rows.append({
                "c": c,
                "witness": ",".join(str(x) for x in witness) if witness else "none",
                "two_adic_obstruction": two_adic_obstruction(c) if quartic else "",
            })
        outcome.exact["bounds"] = f"m<={params.m_bound}, |n|<={params.n_bound}"
        outcome.notes.append("witness is (n1, n2, m); 'none' means none within the bounds")
        return outcome
