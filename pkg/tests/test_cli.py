import csv
import json
from io import StringIO

from rich.console import Console

from src.cli.hklab_cli import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    collect_parameters,
    run,
)
from src.models import Command


def _make_console() -> tuple[Console, StringIO]:
    """Helper to capture output with the same settings the CLI uses."""
    buffer = StringIO()
    console = Console(
        file=buffer,
        width=160,
        color_system=None,
        force_terminal=False,
        highlight=False,
        markup=False,
        emoji=False,
    )
    return console, buffer


def _run(*argv: str) -> tuple[int, str]:
    console, buffer = _make_console()
    code = run(list(argv), console=console)
    return code, buffer.getvalue()


# MARK: - Exit statuses


def test_limit_splitting_preset_prints_exact_value() -> None:
    code, output = _run("limit-splitting", "--preset", "quadric")

    assert code == EXIT_OK
    assert "# command: limit-splitting" in output
    assert "hk_multiplicity = 4/3" in output
    assert "(approximate)" in output


def test_unknown_preset_is_a_usage_error() -> None:
    code, output = _run("limit-splitting", "--preset", "cubic")

    assert code == EXIT_USAGE
    assert output == ""


def test_unknown_command_is_a_usage_error() -> None:
    code, _ = _run("hk-everything")

    assert code == EXIT_USAGE


def test_version_flag_exits_zero(capsys) -> None:
    code, _ = _run("--version")

    assert code == EXIT_OK
    assert "hklab" in capsys.readouterr().out


def test_malformed_flag_value_is_a_usage_error() -> None:
    assert _run("chern-check", "--delta", "a..b")[0] == EXIT_USAGE
    assert _run("chern-check", "--delta", "0,1")[0] == EXIT_USAGE
    assert _run("chern-check", "--jobs", "0")[0] == EXIT_USAGE


def test_quartic_scan_preset_within_range() -> None:
    code, output = _run("quartic-scan", "--preset", "fggl", "--primes", "2..5")

    assert code == EXIT_OK
    assert "singular = 3 5" in output


def test_expected_determinant_mismatch_exits_one(tmp_path) -> None:
    descriptor = tmp_path / "matrix.json"
    descriptor.write_text(json.dumps({
        "matrix": [["X", "0", "0", "0"], ["0", "Y", "0", "0"], ["0", "0", "Z", "0"], ["0", "0", "0", "W"]],
        "expected_det": "X^4",
    }))

    code, output = _run("quartic-det", "--matrix", str(descriptor))

    assert code == EXIT_FAILURE
    assert "# status: consistency_failure" in output


def test_computation_failure_exits_one() -> None:
    code, output = _run("hk-ideal", "--ideal", "X+", "--emax", "1")

    assert code == EXIT_FAILURE
    assert "# status: failure" in output


# MARK: - Parameters


def test_flags_override_preset_values() -> None:
    args = build_parser().parse_args(["cone-threshold", "--preset", "quartic-lattice", "--L=1,-1", "--L=-2,1"])

    parameters = collect_parameters(Command.CONE_THRESHOLD, args)

    assert parameters["L"] == [[1, -1], [-2, 1]]
    assert parameters["gram"] == [[4, 2], [2, -4]]


def test_bare_matrix_file_for_quartic_commands(tmp_path) -> None:
    path = tmp_path / "diag.json"
    path.write_text(json.dumps([["X", "0", "0", "0"], ["0", "Y", "0", "0"], ["0", "0", "Z", "0"], ["0", "0", "0", "W"]]))
    args = build_parser().parse_args(["quartic-det", "--matrix", str(path)])

    parameters = collect_parameters(Command.QUARTIC_DET, args)

    assert parameters["matrix"][1][1] == "Y"


def test_missing_file_is_a_usage_error(tmp_path) -> None:
    code, _ = _run("cone-orbit", "--lattice", str(tmp_path / "missing.json"))

    assert code == EXIT_USAGE


def test_hk_ideal_juxtaposition_flags() -> None:
    code, output = _run("hk-ideal", "--p", "2", "--ring", "XY-ZW", "--ideal", "X,Y,Z,W", "--emax", "2")

    assert code == EXIT_OK
    assert "dimension = 3" in output
    assert "ratio_at_max = 21/16" in output


# MARK: - Output files


def test_output_is_byte_identical_across_runs_and_jobs() -> None:
    first = _run("chern-check", "--delta", "1..6")
    second = _run("chern-check", "--delta", "1..6", "--jobs", "2")

    assert first == second


def test_oracle_csv_columns(tmp_path) -> None:
    path = tmp_path / "oracle.csv"

    code, _ = _run("limit-oracle", "--preset", "quartic-lattice", "--n", "16,32", "--csv", str(path))

    assert code == EXIT_OK
    with open(path, newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["n", "oracle_value_num", "oracle_value_den", "limit_decimal_50digits", "scaled_gap_approx"]
    assert [row[0] for row in rows[1:]] == ["16", "32"]
    assert rows[1][3].startswith("0.3633899812498247470")


def test_json_report_has_no_wall_clock(tmp_path) -> None:
    path = tmp_path / "report.json"

    code, _ = _run("cone-represents", "--c=-4..-1", "--m-bound", "20", "--n-bound", "20", "--json", str(path))

    payload = json.loads(path.read_text(encoding="utf-8"))
    assert code == EXIT_OK
    assert payload["command"] == "cone-represents"
    assert "finished_at" not in payload
    assert [row["c"] for row in payload["rows"]] == [-4, -3, -2, -1]
    assert payload["rows"][2]["witness"] == "none"


def test_json_report_is_byte_identical_across_runs_and_jobs(tmp_path) -> None:
    serial = tmp_path / "serial.json"
    parallel = tmp_path / "parallel.json"

    assert _run("limit-oracle", "--surface", "p1xp1", "--L=-4,-2", "--n", "4,8", "--json", str(serial))[0] == EXIT_OK
    assert _run("limit-oracle", "--surface", "p1xp1", "--L=-4,-2", "--n", "4,8", "--jobs", "2", "--json", str(parallel))[0] == EXIT_OK

    payload = json.loads(serial.read_text(encoding="utf-8"))
    assert "runtime_ms" not in payload
    assert "duration_seconds" not in payload["metrics"]
    assert "jobs" not in payload["metrics"]
    assert serial.read_bytes() == parallel.read_bytes()
