"""
Listing of the shipped presets with their headline values.

Responsibility: presets command
"""

from __future__ import annotations

from ..determinantal import builtin_matrix, det4
from ..lattice import DivClass, GramLattice, antiample_threshold, positive_boundary
from ..models import Command, PresetsParams
from ..utils.formatting import format_exact
from .base_experiment import BaseExperiment, ExperimentOutcome
from .presets import presets


class PresetsExperiment(BaseExperiment[PresetsParams]):
    """Names, descriptions and covered commands of every preset"""

    command = Command.PRESETS
    params_model = PresetsParams

    def compute(self, params: PresetsParams) -> ExperimentOutcome:
        outcome = ExperimentOutcome(columns=["name", "commands", "description"])
        for preset in presets().values():
            outcome.rows.append({
                "name": preset.name,
                "commands": " ".join(preset.commands),
                "description": preset.description,
            })

        quartic = GramLattice.quartic_plane()
        boundary = positive_boundary(quartic, DivClass.of(1, 0), DivClass.of(0, 1))
        outcome.exact["quartic-lattice.boundary"] = f"{format_exact(boundary.lower)}, {format_exact(boundary.upper)}"

        quadric = GramLattice.p1xp1()
        H = DivClass.of(1, 1)
        thresholds = [antiample_threshold(quadric, H, DivClass.of(*L)) for L in ((-4, -2), (-2, -4))]
        outcome.exact["quadric.thresholds"] = ", ".join(format_exact(b) for b in thresholds)

        outcome.exact["brinkmann.det"] = str(det4(builtin_matrix("brinkmann")))
        return outcome
