"""
Models package for hklab.

This package contains the pydantic models for:
- Hilbert-Kunz samples and series
- Experiment specifications and per-command parameters
- Experiment reports, errors and metrics
"""

from .experiment_models import (
    ChernCheckParams,
    Command,
    ConeOrbitParams,
    ConeRepresentsParams,
    ConeThresholdParams,
    ExperimentParams,
    ExperimentSpec,
    HKIdealParams,
    HKMonomialParams,
    HKReduceParams,
    LimitOracleParams,
    LimitSplittingParams,
    OracleKind,
    PresetsParams,
    QuarticDetParams,
    QuarticMinorsParams,
    QuarticScanParams,
    SurfaceName,
)
from .hk_models import HKSample, HKSeries
from .report_models import ExperimentReport, RunError, RunMetrics, RunStatus

__all__ = [
    "ChernCheckParams",
    "Command",
    "ConeOrbitParams",
    "ConeRepresentsParams",
    "ConeThresholdParams",
    "ExperimentParams",
    "ExperimentReport",
    "ExperimentSpec",
    "HKIdealParams",
    "HKMonomialParams",
    "HKReduceParams",
    "HKSample",
    "HKSeries",
    "LimitOracleParams",
    "LimitSplittingParams",
    "OracleKind",
    "PresetsParams",
    "QuarticDetParams",
    "QuarticMinorsParams",
    "QuarticScanParams",
    "RunError",
    "RunMetrics",
    "RunStatus",
    "SurfaceName",
]
