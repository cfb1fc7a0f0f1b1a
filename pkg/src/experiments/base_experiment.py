"""
Base experiment interface for all CLI commands.

Defines the contract every experiment implements: validate parameters, run
the exact computation, and return an ExperimentReport. Computation errors are
caught and reported, never raised; only usage errors escape.

Responsibility: Abstract base class defining the experiment contract
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, ClassVar, Generic, Mapping, Optional, TypeVar

from pydantic import ValidationError

from ..exceptions import ConsistencyError, ExperimentUsageError, HKLabError
from ..models import Command, ExperimentParams, ExperimentReport, RunError, RunMetrics, RunStatus
from ..orchestration.fanout import resolve_jobs
from ..utils.hash_utils import compute_input_hash

P = TypeVar("P", bound=ExperimentParams)


@dataclass
class ExperimentOutcome:
    """
    What a computation produced, before it is wrapped into a report.

    ``mismatches`` lists disagreements between independent computations;
    any entry turns the run into a consistency failure.
    """

    columns: list[str] = field(default_factory=list)
    rows: list[dict[str, Any]] = field(default_factory=list)
    exact: dict[str, str] = field(default_factory=dict)
    approx: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)
    tasks_attempted: Optional[int] = None


class BaseExperiment(ABC, Generic[P]):
    """
    Abstract base class for all experiments.

    Every experiment MUST:
    1. Declare ``command`` and ``params_model``
    2. Implement compute() returning an ExperimentOutcome
    3. Keep rows in a deterministic order so repeated runs print identically

    Subclasses should NOT:
    - Catch library errors themselves (run() turns them into failure reports)
    - Put decimals in exact columns (approximations go in ``*_approx`` columns or ``approx``)
    """

    command: ClassVar[Command]
    params_model: ClassVar[type[ExperimentParams]]

    def __init__(self, jobs: Optional[int] = None):
        """
        Args:
            jobs: Worker processes for per-prime / per-e fan-out (settings default)
        """
        self.jobs = resolve_jobs(jobs)
        self.logger = logging.getLogger(f"experiment.{self.command.value}")

    def validate(self, parameters: Mapping[str, Any]) -> P:
        """
        Raises:
            ExperimentUsageError: if the parameters do not fit ``params_model``
        """
        try:
            return self.params_model.model_validate(dict(parameters))
        except ValidationError as exc:
            messages = "; ".join(
                f"{'.'.join(str(part) for part in err['loc']) or 'parameters'}: {err['msg']}"
                for err in exc.errors()
            )
            raise ExperimentUsageError(f"{self.command.value}: {messages}") from exc

    @abstractmethod
    def compute(self, params: P) -> ExperimentOutcome:
        """
        Run the computation for validated parameters.

        Raises:
            HKLabError: caught by run() and reported as a failure
        """

    def run(self, parameters: Mapping[str, Any]) -> ExperimentReport:
        """
        Validate, compute and report.

        Raises:
            ExperimentUsageError: for invalid parameters (CLI exit status 2)
        """
        params = self.validate(parameters)
        inputs = params.model_dump(mode="json")
        start_time = datetime.now(timezone.utc)
        self.logger.info(f"Stage 1: {self.command.value} (input hash {compute_input_hash(inputs)[:12]})")
        try:
            outcome = self.compute(params)
        except ExperimentUsageError:
            raise
        except ConsistencyError as exc:
            self.logger.error(f"Consistency trap in {self.command.value}: {exc}")
            return self._build_failure_response(exc, inputs, start_time, RunStatus.CONSISTENCY_FAILURE)
        except (HKLabError, ValueError, ZeroDivisionError) as exc:
            self.logger.error(f"{self.command.value} failed: {type(exc).__name__}: {exc}")
            return self._build_failure_response(exc, inputs, start_time, RunStatus.FAILURE)
        self.logger.info(f"Stage 2: {self.command.value} produced {len(outcome.rows)} rows")
        return self._build_success_response(outcome, inputs, start_time)

    def _build_success_response(
        self,
        outcome: ExperimentOutcome,
        inputs: dict[str, Any],
        start_time: datetime,
    ) -> ExperimentReport:
        """
        Build a report from a finished computation.

        Mismatches between independent computations turn the status into
        CONSISTENCY_FAILURE; the rows are kept so the disagreement is visible.
        """
        end_time = datetime.now(timezone.utc)
        duration = (end_time - start_time).total_seconds()

        errors = [
            RunError(
                timestamp=end_time,
                error_type=ConsistencyError.__name__,
                message=message,
                context={"command": self.command.value},
            )
            for message in outcome.mismatches
        ]
        for message in outcome.mismatches:
            self.logger.error(f"Consistency trap in {self.command.value}: {message}")
        status = RunStatus.CONSISTENCY_FAILURE if errors else RunStatus.SUCCESS
        attempted = outcome.tasks_attempted if outcome.tasks_attempted is not None else len(outcome.rows)

        return ExperimentReport(
            command=self.command.value,
            status=status,
            inputs=inputs,
            input_hash=compute_input_hash(inputs),
            columns=outcome.columns,
            rows=outcome.rows,
            exact=outcome.exact,
            approx=outcome.approx,
            notes=outcome.notes,
            errors=errors,
            metrics=RunMetrics(
                tasks_attempted=attempted,
                tasks_succeeded=attempted,
                tasks_failed=0,
                duration_seconds=duration,
                jobs=self.jobs,
            ),
            runtime_ms=int(duration * 1000),
            finished_at=end_time,
        )

    def _build_failure_response(
        self,
        error: Exception,
        inputs: dict[str, Any],
        start_time: datetime,
        status: RunStatus = RunStatus.FAILURE,
    ) -> ExperimentReport:
        """
        Build a report for a computation that raised.
        """
        end_time = datetime.now(timezone.utc)
        duration = (end_time - start_time).total_seconds()

        return ExperimentReport(
            command=self.command.value,
            status=status,
            inputs=inputs,
            input_hash=compute_input_hash(inputs),
            errors=[RunError(
                timestamp=end_time,
                error_type=type(error).__name__,
                message=str(error),
                context={"command": self.command.value},
            )],
            metrics=RunMetrics(
                tasks_attempted=1,
                tasks_succeeded=0,
                tasks_failed=1,
                duration_seconds=duration,
                jobs=self.jobs,
            ),
            runtime_ms=int(duration * 1000),
            finished_at=end_time,
        )
