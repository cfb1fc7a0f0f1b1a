"""
Experiment report models.

Defines the unified report structure returned by every experiment. Reports
carry exact values as text, companion decimals, structured errors and run
metrics, and serialize to the JSON report schema of the CLI.

Responsibility: Data transfer objects for experiment runs
"""

from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class RunStatus(str, Enum):
    """
    Status of an experiment run.

    The CLI maps FAILURE and CONSISTENCY_FAILURE to exit status 1.
    """
    SUCCESS = "success"
    FAILURE = "failure"
    CONSISTENCY_FAILURE = "consistency_failure"  # two independent computations disagreed


class RunError(BaseModel):
    """
    Structured error information from a run.
    """
    timestamp: datetime = Field(description="When the error occurred (UTC)")
    error_type: str = Field(description="Exception class name")
    message: str = Field(description="Human-readable error message")
    context: Dict[str, Any] = Field(
        default_factory=dict,
        description="Additional context (prime, exponent, preset, ...)"
    )


class RunMetrics(BaseModel):
    """
    Operational metrics for a run.
    """
    tasks_attempted: int = Field(ge=0, description="Independent computations started")
    tasks_succeeded: int = Field(ge=0, description="Computations that returned a value")
    tasks_failed: int = Field(ge=0, description="Computations that raised")
    duration_seconds: float = Field(ge=0.0, description="Wall-clock time in seconds")
    jobs: int = Field(ge=1, default=1, description="Worker processes used")


class ExperimentReport(BaseModel):
    """
    Unified report for all experiments.

    ``rows`` hold table rows whose cells are exact text (integers, ``p/q`` or
    ``a+b*sqrt(d)``) except in columns whose name ends in ``_approx``.
    ``exact`` and ``approx`` hold named headline values.

    Responsibility: Standard report container with status, rows, errors, metrics
    """
    command: str = Field(description="Experiment command name")
    status: RunStatus = Field(description="Run status")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Normalized inputs (p, seeds, bounds)")
    input_hash: str = Field(description="SHA-256 of the normalized inputs")
    columns: List[str] = Field(default_factory=list, description="Row column names")
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    exact: Dict[str, str] = Field(default_factory=dict)
    approx: Dict[str, str] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list, description="Free-text remarks such as 'reported, not asserted'")
    errors: List[RunError] = Field(default_factory=list)
    metrics: RunMetrics = Field(description="Run metrics")
    runtime_ms: int = Field(ge=0, description="Wall-clock runtime in milliseconds")
    finished_at: Optional[datetime] = Field(default=None, description="When the run finished (UTC)")

    def to_json_payload(self) -> Dict[str, Any]:
        """JSON report without timing or worker-count fields, so reruns write identical bytes"""
        return self.model_dump(
            mode="json",
            exclude={
                "finished_at": True,
                "runtime_ms": True,
                "metrics": {"duration_seconds", "jobs"},
                "errors": {"__all__": {"timestamp"}},
            },
        )
