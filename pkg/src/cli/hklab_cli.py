"""
Command-line interface for hklab experiments.

Runs one experiment per invocation, prints an aligned table on standard
output and optionally writes the JSON report and a CSV of the rows.

Usage:
    python -m src.cli.hklab_cli hk-ideal --p 2 --ring "XY-ZW" --ideal "X,Y,Z,W" --emax 3
    python -m src.cli.hklab_cli limit-splitting --preset quadric
    python -m src.cli.hklab_cli quartic-scan --preset fggl --primes 2..1000 --jobs 4
    python -m src.cli.hklab_cli --help
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..config import settings
from ..exceptions import ExperimentUsageError, UnknownPresetError
from ..experiments import preset_parameters, presets, run_experiment
from ..models import Command, ExperimentReport, ExperimentSpec, OracleKind, RunStatus, SurfaceName
from ..poly import split_generators
from ..utils.formatting import parse_range_or_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
CONSOLE_WIDTH = 160
TEXT_COLUMNS = {"L", "commands", "description", "divisor", "minor", "monomial", "name", "witness"}


# MARK: - Flag converters


def _names(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _coords(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ExperimentUsageError(f"expected comma-separated integers, got {text!r}") from exc


def _rows(text: str) -> list[list[int]]:
    """``"1,1;1,2"`` -> [[1, 1], [1, 2]]"""
    return [_coords(row) for row in text.split(";") if row.strip()]


def _int_list(text: str) -> list[int]:
    try:
        return parse_range_or_list(text)
    except ValueError as exc:
        raise ExperimentUsageError(str(exc)) from exc


def _json_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExperimentUsageError(f"invalid JSON {text!r}: {exc}") from exc


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ExperimentUsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ExperimentUsageError(f"{path} is not valid JSON: {exc}") from exc


@dataclass(frozen=True)
class Flag:
    """One command-line flag and the parameter it fills"""

    name: str
    key: str
    help: str
    convert: Optional[Callable[[str], Any]] = None   # None: boolean switch
    repeat: bool = False
    choices: Optional[Sequence[str]] = None

    @property
    def dest(self) -> str:
        return "opt_" + self.name.lstrip("-").replace("-", "_")


_P = Flag("--p", "p", "prime characteristic", int)
_VARS = Flag("--vars", "variables", "comma-separated variable names", _names)
_PRIMES = Flag("--primes", "primes", 'primes as "a..b" or a list (non-primes are skipped)', _int_list)

FLAGS: dict[Command, list[Flag]] = {
    Command.HK_IDEAL: [
        _P,
        _VARS,
        Flag("--ring", "relations", 'relations, e.g. "XY-ZW"', split_generators),
        Flag("--ideal", "ideal", 'ideal generators, e.g. "X,Y,Z,W"', split_generators),
        Flag("--emin", "e_min", "first Frobenius exponent (default 1)", int),
        Flag("--emax", "e_max", "last Frobenius exponent (default 3)", int),
        Flag("--dimension", "dimension", "Krull dimension of the ring", int),
        Flag("--closed-form", "compare_closed_form", "add the conjectural quadric closed form column"),
    ],
    Command.HK_REDUCE: [
        _P,
        _VARS,
        Flag("--block", "blocks", "generators of one cyclic summand (repeatable)", split_generators, repeat=True),
        Flag("--annihilator", "annihilator", "generators of the annihilator", split_generators),
        Flag("--e", "e_list", 'Frobenius exponents, "a..b" or a list', _int_list),
    ],
    Command.HK_MONOMIAL: [
        _P,
        _VARS,
        Flag("--monomials", "monomials", 'monomial generators, e.g. "X^2,Y^2,Z^2,XY"', split_generators),
        Flag("--e", "e_list", 'Frobenius exponents, "a..b" or a list', _int_list),
    ],
    Command.CONE_THRESHOLD: [
        Flag("--H", "H", "ample class coordinates", _coords),
        Flag("--D", "D", "second class spanning the plane", _coords),
        Flag("--L", "L", "class whose thresholds are wanted (repeatable)", _coords, repeat=True),
    ],
    Command.CONE_ORBIT: [
        Flag("--isometry", "matrix", 'integer matrix rows, e.g. "1,1;1,2"', _rows),
        Flag("--start", "start", "starting class coordinates", _coords),
        Flag("--steps", "steps", "number of iterations", int),
        Flag("--inverse", "inverse", "iterate the inverse matrix"),
    ],
    Command.CONE_REPRESENTS: [
        Flag("--c", "c", 'target values, "a..b" or a list', _int_list),
        Flag("--m-bound", "m_bound", "largest m", int),
        Flag("--n-bound", "n_bound", "largest |n1|, |n2|", int),
    ],
    Command.LIMIT_SPLITTING: [
        Flag("--surface", "surface", "surface data", str, choices=[s.value for s in SurfaceName]),
        Flag("--L", "summands", "summand class coordinates (repeatable)", _coords, repeat=True),
        Flag("--betti", "betti", 'punctured Betti table as JSON, e.g. \'{"0":[0],"1":[1,1]}\'', _json_text),
    ],
    Command.LIMIT_ORACLE: [
        Flag("--surface", "surface", "surface data", str, choices=[s.value for s in SurfaceName]),
        Flag("--kind", "kind", "which sum to evaluate", str, choices=[k.value for k in OracleKind]),
        Flag("--L", "L", "class for the threshold sum", _coords),
        Flag("--D", "D", "class orthogonalized against H for the h1 sums", _coords),
        Flag("--n", "ns", 'values of n, "a..b" or a list', _int_list),
    ],
    Command.CHERN_CHECK: [
        Flag("--delta", "deltas", 'values of delta, "a..b" or a list', _int_list),
    ],
    Command.QUARTIC_DET: [],
    Command.QUARTIC_SCAN: [_PRIMES],
    Command.QUARTIC_MINORS: [_PRIMES],
    Command.PRESETS: [],
}

# Commands reading a JSON file, keyed by flag name
FILE_FLAGS: dict[Command, str] = {
    Command.HK_IDEAL: "--descriptor",
    Command.CONE_THRESHOLD: "--lattice",
    Command.CONE_ORBIT: "--lattice",
    Command.CONE_REPRESENTS: "--lattice",
    Command.QUARTIC_DET: "--matrix",
    Command.QUARTIC_SCAN: "--matrix",
    Command.QUARTIC_MINORS: "--matrix",
}

HELP: dict[Command, str] = {
    Command.HK_IDEAL: "Hilbert-Kunz function of an ideal via Frobenius-power colengths",
    Command.HK_REDUCE: "exact check of the module-to-ideal reduction identity",
    Command.HK_MONOMIAL: "Gröbner colength against the staircase count for a monomial ideal",
    Command.CONE_THRESHOLD: "positive-cone boundary and antiample/ample thresholds",
    Command.CONE_ORBIT: "orbit of a class under a lattice isometry",
    Command.CONE_REPRESENTS: "bounded search for Q(n1, n2) = c m^2",
    Command.LIMIT_SPLITTING: "HK multiplicity of a split syzygy bundle on a surface",
    Command.LIMIT_ORACLE: "exact Riemann sums against the closed-form limit",
    Command.CHERN_CHECK: "Chern classes of the resolution bundle with identity checks",
    Command.QUARTIC_DET: "determinant of a 4x4 matrix of linear forms",
    Command.QUARTIC_SCAN: "primes where the determinantal quartic is singular",
    Command.QUARTIC_MINORS: "curve minors, Laplace identity and ideal membership",
    Command.PRESETS: "list the shipped presets",
}


# MARK: - Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help=f"start from a preset ({', '.join(presets())})")
    common.add_argument("--json", dest="json_path", help="write the JSON report to PATH")
    common.add_argument("--csv", dest="csv_path", help="write the rows as CSV to PATH")
    common.add_argument("--jobs", type=int, help="worker processes (default: HKLAB_JOBS or 1)")
    common.add_argument("--verbose", action="store_true", help="enable DEBUG logging")

    parser = argparse.ArgumentParser(
        prog=settings.app.app_name,
        description="Exact Hilbert-Kunz, lattice and determinantal quartic experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Hilbert-Kunz function of the maximal ideal of the quadric cone
  python -m src.cli.hklab_cli hk-ideal --p 2 --ring "XY-ZW" --ideal "X,Y,Z,W" --emax 3

  # Split-bundle formula on the quadric (exactly 4/3)
  python -m src.cli.hklab_cli limit-splitting --preset quadric

  # Singular primes of a determinantal quartic, four workers, rows to CSV
  python -m src.cli.hklab_cli quartic-scan --preset fggl --primes 2..1000 --jobs 4 --csv scan.csv

  # Summation oracle against the irrational limit, JSON report
  python -m src.cli.hklab_cli limit-oracle --preset quartic-lattice --n 16,64,256 --json oracle.json

  # Values starting with a minus sign need the --flag=value form
  python -m src.cli.hklab_cli cone-threshold --preset quartic-lattice --L=-2,1 --L=1,-1
        """
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app.app_version}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in Command:
        sub = subparsers.add_parser(command.value, parents=[common], help=HELP[command], allow_abbrev=False)
        if command in FILE_FLAGS:
            flag = FILE_FLAGS[command]
            sub.add_argument(flag, dest="json_file", metavar="FILE", help="JSON input file")
        for flag in FLAGS[command]:
            if flag.convert is None:
                sub.add_argument(flag.name, dest=flag.dest, action="store_true", help=flag.help)
            else:
                sub.add_argument(
                    flag.name,
                    dest=flag.dest,
                    action="append" if flag.repeat else "store",
                    choices=flag.choices,
                    help=flag.help,
                )
    return parser


def collect_parameters(command: Command, args: argparse.Namespace) -> dict[str, Any]:
    """
    Preset values, then the JSON file, then explicit flags; later wins.

    Raises:
        ExperimentUsageError: for malformed flag values or unreadable files
        UnknownPresetError: for an unknown preset name
    """
    parameters: dict[str, Any] = {}
    if args.preset:
        parameters.update(preset_parameters(args.preset, command))

    json_file = getattr(args, "json_file", None)
    if json_file:
        payload = _load_json(json_file)
        if isinstance(payload, dict):
            parameters.update(payload)
        elif command in (Command.QUARTIC_DET, Command.QUARTIC_SCAN, Command.QUARTIC_MINORS):
            parameters["matrix"] = payload
        else:
            raise ExperimentUsageError(f"{json_file} must hold a JSON object")

    for flag in FLAGS[command]:
        value = getattr(args, flag.dest, None)
        if flag.convert is None:
            if value:
                parameters[flag.key] = True
        elif value is not None:
            parameters[flag.key] = [flag.convert(v) for v in value] if flag.repeat else flag.convert(value)
    return parameters


# MARK: - Output


def _console(stderr: bool = False) -> Console:
    """Fixed-width, colourless console so repeated runs print identical bytes"""
    return Console(
        width=CONSOLE_WIDTH,
        color_system=None,
        force_terminal=False,
        highlight=False,
        markup=False,
        emoji=False,
        stderr=stderr,
    )


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_report(report: ExperimentReport, console: Console) -> None:
    console.print(f"# command: {report.command}")
    console.print(f"# status: {report.status.value}")
    console.print(f"# input_hash: {report.input_hash}")
    for key in sorted(report.inputs):
        console.print(f"# {key}: {json.dumps(report.inputs[key], sort_keys=True)}")

    if report.columns:
        table = Table(box=box.SIMPLE, show_edge=False, pad_edge=False)
        for column in report.columns:
            table.add_column(column, justify="left" if column in TEXT_COLUMNS else "right")
        for row in report.rows:
            table.add_row(*(Text(_cell(row.get(column, ""))) for column in report.columns))
        console.print(table)

    for key, value in report.exact.items():
        console.print(f"{key} = {value}")
    for key, value in report.approx.items():
        console.print(f"{key} ~ {value}  (approximate)")
    for note in report.notes:
        console.print(f"note: {note}")


def write_json(report: ExperimentReport, path: str) -> Path:
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(report.to_json_payload(), f, indent=2, ensure_ascii=False)
        f.write("\n")
    return output_path


def write_csv(report: ExperimentReport, path: str) -> Path:
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=report.columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow({column: _cell(row.get(column, "")) for column in report.columns})
    return output_path


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else settings.app.log_level
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


# MARK: - Entry point


def run(argv: Optional[Sequence[str]] = None, console: Optional[Console] = None) -> int:
    """
    Parse arguments, run one experiment and emit its report.

    Returns:
        0 on success, 1 for computation or consistency failures, 2 for usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.verbose)
    console = console or _console()
    errors = _console(stderr=True)

    command = Command(args.command)
    try:
        parameters = collect_parameters(command, args)
        spec = ExperimentSpec(command=command, parameters=parameters, jobs=args.jobs)
        report = run_experiment(spec)
    except UnknownPresetError as exc:
        errors.print(f"usage error: {exc.args[0]}")
        return EXIT_USAGE
    except (ExperimentUsageError, ValidationError) as exc:
        errors.print(f"usage error: {exc}")
        return EXIT_USAGE

    render_report(report, console)
    try:
        if args.json_path:
            logger.info(f"JSON report saved to: {write_json(report, args.json_path).absolute()}")
        if args.csv_path:
            logger.info(f"CSV rows saved to: {write_csv(report, args.csv_path).absolute()}")
    except OSError as exc:
        errors.print(f"error: cannot write output: {exc}")
        return EXIT_FAILURE

    if report.status != RunStatus.SUCCESS:
        for error in report.errors:
            errors.print(f"error: [{error.error_type}] {error.message}")
        return EXIT_FAILURE
    return EXIT_OK


def main() -> None:
    """Main CLI entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
