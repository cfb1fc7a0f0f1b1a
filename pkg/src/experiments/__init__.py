"""
Experiments package.

One experiment class per CLI command, all built on BaseExperiment, plus the
preset registry.
"""

from typing import Optional

from ..models import Command, ExperimentReport, ExperimentSpec
from .base_experiment import BaseExperiment, ExperimentOutcome
from .hilbert_kunz_experiments import HKIdealExperiment, HKMonomialExperiment, HKReduceExperiment
from .lattice_experiments import ConeOrbitExperiment, ConeRepresentsExperiment, ConeThresholdExperiment
from .limit_experiments import ChernCheckExperiment, LimitOracleExperiment, LimitSplittingExperiment
from .presets import Preset, get_preset, preset_parameters, presets
from .presets_experiment import PresetsExperiment
from .quartic_experiments import QuarticDetExperiment, QuarticMinorsExperiment, QuarticScanExperiment

EXPERIMENTS: dict[Command, type[BaseExperiment]] = {
    cls.command: cls
    for cls in (
        HKIdealExperiment,
        HKReduceExperiment,
        HKMonomialExperiment,
        ConeThresholdExperiment,
        ConeOrbitExperiment,
        ConeRepresentsExperiment,
        LimitSplittingExperiment,
        LimitOracleExperiment,
        ChernCheckExperiment,
        QuarticDetExperiment,
        QuarticScanExperiment,
        QuarticMinorsExperiment,
        PresetsExperiment,
    )
}


def create_experiment(command: Command, jobs: Optional[int] = None) -> BaseExperiment:
    return EXPERIMENTS[command](jobs=jobs)


def run_experiment(spec: ExperimentSpec) -> ExperimentReport:
    """
    Dispatch a validated spec.

    Raises:
        ExperimentUsageError: for parameters the command rejects
    """
    return create_experiment(spec.command, spec.jobs).run(spec.parameters)


__all__ = [
    "BaseExperiment",
    "ChernCheckExperiment",
    "ConeOrbitExperiment",
    "ConeRepresentsExperiment",
    "ConeThresholdExperiment",
    "EXPERIMENTS",
    "ExperimentOutcome",
    "HKIdealExperiment",
    "HKMonomialExperiment",
    "HKReduceExperiment",
    "LimitOracleExperiment",
    "LimitSplittingExperiment",
    "Preset",
    "PresetsExperiment",
    "QuarticDetExperiment",
    "QuarticMinorsExperiment",
    "QuarticScanExperiment",
    "create_experiment",
    "get_preset",
    "preset_parameters",
    "presets",
    "run_experiment",
]
