import pytest

from src.exceptions import ExperimentUsageError, UnknownPresetError
from src.experiments import (
    EXPERIMENTS,
    ChernCheckExperiment,
    ConeRepresentsExperiment,
    ConeThresholdExperiment,
    HKIdealExperiment,
    HKMonomialExperiment,
    HKReduceExperiment,
    LimitOracleExperiment,
    LimitSplittingExperiment,
    PresetsExperiment,
    QuarticDetExperiment,
    QuarticMinorsExperiment,
    create_experiment,
    get_preset,
    preset_parameters,
    run_experiment,
)
from src.experiments.limit_experiments import ORACLE_COLUMNS
from src.models import Command, ExperimentSpec, RunStatus


def _make_spec(command: Command, preset: str | None = None, **overrides) -> ExperimentSpec:
    """Helper to create an ExperimentSpec from a preset plus overrides."""
    parameters = preset_parameters(preset, command) if preset else {}
    parameters.update(overrides)
    return ExperimentSpec(command=command, parameters=parameters, jobs=1)


# MARK: - Registry


def test_every_command_has_an_experiment() -> None:
    assert set(EXPERIMENTS) == set(Command)
    for command, cls in EXPERIMENTS.items():
        assert cls.command == command


def test_create_experiment_resolves_jobs() -> None:
    experiment = create_experiment(Command.CHERN_CHECK, jobs=3)

    assert isinstance(experiment, ChernCheckExperiment)
    assert experiment.jobs == 3


def test_unknown_preset() -> None:
    with pytest.raises(UnknownPresetError):
        get_preset("cubic")


def test_preset_without_command_entry() -> None:
    with pytest.raises(ExperimentUsageError):
        preset_parameters("brinkmann", Command.CONE_ORBIT)


# MARK: - Hilbert-Kunz


def test_hk_ideal_quadric_preset() -> None:
    report = run_experiment(_make_spec(Command.HK_IDEAL, "quadric"))

    assert report.status == RunStatus.SUCCESS
    assert [row["length"] for row in report.rows] == [10, 84, 680]
    assert [row["ratio"] for row in report.rows] == ["5/4", "21/16", "85/64"]
    assert [row["closed_form"] for row in report.rows] == ["10", "84", "680"]
    assert report.exact["dimension"] == "3"
    assert report.exact["ratio_at_max"] == "85/64"


def test_hk_ideal_rejects_inverted_range() -> None:
    with pytest.raises(ExperimentUsageError):
        HKIdealExperiment(jobs=1).run({"ideal": ["X"], "e_min": 3, "e_max": 1})


def test_hk_ideal_bad_polynomial_is_a_failure_report() -> None:
    report = HKIdealExperiment(jobs=1).run({"ideal": ["X + "], "e_max": 1})

    assert report.status == RunStatus.FAILURE
    assert report.errors and report.rows == []


def test_hk_reduce_default_blocks_agree() -> None:
    report = HKReduceExperiment(jobs=1).run({})

    assert report.status == RunStatus.SUCCESS
    assert [row["e"] for row in report.rows] == [1, 2]
    assert all(row["equal"] for row in report.rows)
    assert all(row["lhs"] == row["rhs"] for row in report.rows)


def test_hk_reduce_rejects_unknown_parameter() -> None:
    with pytest.raises(ExperimentUsageError):
        HKReduceExperiment(jobs=1).run({"blocks": [["X"]], "extra": 1})


def test_hk_monomial_default_volume() -> None:
    report = HKMonomialExperiment(jobs=1).run({})

    assert report.status == RunStatus.SUCCESS
    assert report.exact["hk_multiplicity"] == "6"
    assert all(row["groebner_length"] == row["staircase_length"] for row in report.rows)


def test_hk_monomial_rejects_binomial() -> None:
    with pytest.raises(ExperimentUsageError):
        HKMonomialExperiment(jobs=1).run({"monomials": ["X^2 + Y^2"]})


# MARK: - Lattice


def test_cone_threshold_quadric() -> None:
    report = run_experiment(_make_spec(Command.CONE_THRESHOLD, "quadric"))

    assert report.status == RunStatus.SUCCESS
    assert report.exact["thresholds"] == "2, 2"
    assert [row["limit"] for row in report.rows] == ["20/3", "20/3"]


def test_cone_threshold_quartic_boundary() -> None:
    report = run_experiment(_make_spec(Command.CONE_THRESHOLD, "quartic-lattice"))

    assert report.status == RunStatus.SUCCESS
    assert report.exact["boundary_lower"] == "1/2-1/2*sqrt(5)"
    assert report.exact["boundary_upper"] == "1/2+1/2*sqrt(5)"
    assert report.rows[0]["limit"] == "-3/2+5/6*sqrt(5)"
    assert any("sqrt(5)" in note for note in report.notes)


def test_cone_threshold_rejects_wrong_rank() -> None:
    report = ConeThresholdExperiment(jobs=1).run({"L": [[1, 2, 3]]})

    assert report.status == RunStatus.FAILURE


def test_cone_orbit_keeps_self_intersection() -> None:
    report = run_experiment(_make_spec(Command.CONE_ORBIT, "quartic-lattice", steps=6))

    assert report.status == RunStatus.SUCCESS
    assert len(report.rows) == 7
    assert {row["self_intersection"] for row in report.rows} == {4}
    assert report.exact["self_intersection"] == "4"


def test_cone_represents_minus_two() -> None:
    report = ConeRepresentsExperiment(jobs=1).run({"c": [-2, 4], "m_bound": 20, "n_bound": 20})

    assert report.rows[0]["witness"] == "none"
    assert report.rows[1]["witness"] == "1,0,1"
    assert report.rows[0]["two_adic_obstruction"] is True


def test_cone_represents_other_gram_has_no_two_adic_column_value() -> None:
    report = ConeRepresentsExperiment(jobs=1).run({"gram": [[0, 1], [1, 0]], "labels": ["E", "F"], "c": [2]})

    assert report.rows[0]["two_adic_obstruction"] == ""


# MARK: - Limits


def test_limit_splitting_quadric_is_four_thirds() -> None:
    report = run_experiment(_make_spec(Command.LIMIT_SPLITTING, "quadric"))

    assert report.status == RunStatus.SUCCESS
    assert report.exact["hk_multiplicity"] == "4/3"
    assert [row["threshold"] for row in report.rows] == ["2", "2"]


def test_limit_splitting_quartic_is_irrational() -> None:
    report = run_experiment(_make_spec(Command.LIMIT_SPLITTING, "quartic-lattice"))

    assert report.exact["hk_multiplicity"] == "-3/2+5/6*sqrt(5)"
    assert report.exact["betti_term"] == "0"
    assert report.approx["hk_multiplicity"].startswith("0.3633899812")
    assert report.notes


def test_limit_oracle_quadric_rows() -> None:
    report = LimitOracleExperiment(jobs=1).run({"surface": "p1xp1", "L": [-4, -2], "ns": [1, 2]})

    assert report.status == RunStatus.SUCCESS
    assert report.columns == ORACLE_COLUMNS
    # 20/3 - 4/n + 1/(3n^2)
    assert (report.rows[0]["oracle_value_num"], report.rows[0]["oracle_value_den"]) == (3, 1)
    assert (report.rows[1]["oracle_value_num"], report.rows[1]["oracle_value_den"]) == (19, 4)
    assert report.exact["limit"] == "20/3"


def test_limit_oracle_rejects_nonpositive_n() -> None:
    with pytest.raises(ExperimentUsageError):
        LimitOracleExperiment(jobs=1).run({"ns": [0]})


def test_chern_check_rows() -> None:
    report = ChernCheckExperiment(jobs=1).run({"deltas": [1, 2, 3]})

    row = report.rows[1]
    assert (row["delta"], row["c1"], row["degree"], row["c2"]) == (2, -6, -12, 10)
    assert report.status == RunStatus.SUCCESS


def test_chern_check_rejects_zero_delta() -> None:
    with pytest.raises(ExperimentUsageError):
        ChernCheckExperiment(jobs=1).run({"deltas": [0]})


# MARK: - Quartics


def test_quartic_det_brinkmann_matches_expected() -> None:
    report = run_experiment(_make_spec(Command.QUARTIC_DET, "brinkmann"))

    assert report.status == RunStatus.SUCCESS
    assert report.exact["terms"] == "9"
    assert len(report.rows) == 9


def test_quartic_det_reports_mismatch() -> None:
    report = run_experiment(_make_spec(Command.QUARTIC_DET, "brinkmann", expected_det="X^4"))

    assert report.status == RunStatus.CONSISTENCY_FAILURE
    assert report.errors[0].error_type == "ConsistencyError"
    assert len(report.rows) == 9


def test_quartic_det_requires_matrix() -> None:
    with pytest.raises(ExperimentUsageError):
        QuarticDetExperiment(jobs=1).run({})


def test_quartic_scan_fggl_small_primes() -> None:
    report = run_experiment(_make_spec(Command.QUARTIC_SCAN, "fggl", primes=[2, 3, 4, 5, 7, 11, 13]))

    assert report.status == RunStatus.SUCCESS
    assert [row["p"] for row in report.rows] == [2, 3, 5, 7, 11, 13]
    assert report.exact["singular"] == "3 5 7 13"
    assert any("443" in note for note in report.notes)


def test_quartic_minors_brinkmann() -> None:
    report = run_experiment(_make_spec(Command.QUARTIC_MINORS, "brinkmann", primes=[2, 3]))

    assert report.status == RunStatus.SUCCESS
    assert report.exact["laplace_identity"] == "holds"
    assert report.exact["on_surface_mod"] == "2 3"
    assert all(row["matches_expected"] is True for row in report.rows)


def test_quartic_minors_no_expectation() -> None:
    report = QuarticMinorsExperiment(jobs=1).run({"matrix": get_preset("fggl").parameters[Command.QUARTIC_MINORS]["matrix"], "primes": [2]})

    assert report.status == RunStatus.SUCCESS
    assert all(row["matches_expected"] == "" for row in report.rows)


# MARK: - Reports


def test_presets_listing() -> None:
    report = PresetsExperiment(jobs=1).run({})

    assert [row["name"] for row in report.rows] == ["quadric", "quartic-lattice", "brinkmann", "fggl"]
    assert report.exact["quadric.thresholds"] == "2, 2"
    assert report.exact["quartic-lattice.boundary"] == "1/2-1/2*sqrt(5), 1/2+1/2*sqrt(5)"


def test_input_hash_ignores_jobs() -> None:
    serial = ChernCheckExperiment(jobs=1).run({"deltas": [1, 2]})
    parallel = ChernCheckExperiment(jobs=2).run({"deltas": [1, 2]})

    assert serial.input_hash == parallel.input_hash
    assert serial.rows == parallel.rows
    assert parallel.metrics.jobs == 2


def test_json_payload_shape() -> None:
    payload = ChernCheckExperiment(jobs=1).run({"deltas": [1]}).to_json_payload()

    assert payload["command"] == "chern-check"
    assert payload["status"] == "success"
    assert payload["rows"][0]["c2"] == 6
