"""
Named parameter bundles for the shipped examples.

A preset maps each command it applies to onto a parameter dictionary; flags
given on the command line override preset values.

Responsibility: Preset registry and per-command preset parameters
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from ..determinantal import BRINKMANN_SINGULAR_PRIMES, FGGL_SINGULAR_PRIMES, builtin_matrix
from ..exceptions import ExperimentUsageError, UnknownPresetError
from ..lattice import FIBONACCI_MATRIX
from ..models import Command

BRINKMANN_DET = (
    "-X*Y*Z*W - X^3*Z - Y^3*W - X*W^3 - Y*Z^3 + Y*W^3 + X^2*Y^2 + Z^2*W^2 + X*Z^2*W"
)
BRINKMANN_CURVE = (
    "-X^2*Z + Y*Z*W - W^3",
    "Y^2*W - X^2*Y + X*Z*W",
    "-X*Y*W - Y*Z^2 + Z*W^2",
    "-Y*W^2 - X*Z^2",
)

_QUADRIC_GRAM = [[0, 1], [1, 0]]
_QUARTIC_GRAM = [[4, 2], [2, -4]]


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    parameters: Mapping[Command, Mapping[str, Any]]

    @property
    def commands(self) -> list[str]:
        return [command.value for command in self.parameters]


def _quadric() -> Preset:
    return Preset(
        name="quadric",
        description="Cone over P^1 x P^1: F_2[X,Y,Z,W]/(XY-ZW), its split syzygy bundle and Betti table",
        parameters={
            Command.HK_IDEAL: {
                "p": 2,
                "variables": ["X", "Y", "Z", "W"],
                "relations": ["X*Y - Z*W"],
                "ideal": ["X", "Y", "Z", "W"],
                "dimension": 3,
                "e_max": 3,
                "compare_closed_form": True,
            },
            Command.CONE_THRESHOLD: {
                "gram": _QUADRIC_GRAM,
                "labels": ["E", "F"],
                "H": [1, 1],
                "L": [[-4, -2], [-2, -4]],
            },
            Command.LIMIT_SPLITTING: {
                "surface": "p1xp1",
                "summands": [[-4, -2], [-2, -4]],
                "betti": {"0": [0], "1": [1, 1, 1, 1], "2": [2, 2, 2, 2, 2]},
            },
            Command.LIMIT_ORACLE: {"surface": "p1xp1", "kind": "sum", "L": [-4, -2]},
        },
    )


def _quartic_lattice() -> Preset:
    matrix = [list(row) for row in FIBONACCI_MATRIX]
    return Preset(
        name="quartic-lattice",
        description="H, D plane of a determinantal quartic, gram [[4,2],[2,-4]], with the Fibonacci isometry",
        parameters={
            Command.CONE_THRESHOLD: {
                "gram": _QUARTIC_GRAM,
                "labels": ["H", "D"],
                "H": [1, 0],
                "D": [0, 1],
                "L": [[-2, 1]],
            },
            Command.CONE_ORBIT: {
                "gram": _QUARTIC_GRAM,
                "labels": ["H", "D"],
                "matrix": matrix,
                "start": [1, 0],
                "steps": 10,
            },
            Command.CONE_REPRESENTS: {"gram": _QUARTIC_GRAM, "labels": ["H", "D"], "c": [-2, 0]},
            Command.LIMIT_SPLITTING: {"surface": "k3-quartic", "summands": [[-2, 1]], "betti": {}},
            Command.LIMIT_ORACLE: {"surface": "k3-quartic", "kind": "sum", "L": [-2, 1]},
        },
    )


def _matrix_preset(name: str, description: str, known_singular: tuple[int, ...]) -> Preset:
    rows = builtin_matrix(name).to_strings()
    det: dict[str, Any] = {"matrix": rows}
    minors: dict[str, Any] = {"matrix": rows}
    if name == "brinkmann":
        det["expected_det"] = BRINKMANN_DET
        minors["expected_minors"] = list(BRINKMANN_CURVE)
    return Preset(
        name=name,
        description=description,
        parameters={
            Command.QUARTIC_DET: det,
            Command.QUARTIC_SCAN: {"matrix": rows, "known_singular": list(known_singular)},
            Command.QUARTIC_MINORS: minors,
        },
    )


def presets() -> dict[str, Preset]:
    """All shipped presets, keyed by name"""
    return {
        preset.name: preset
        for preset in (
            _quadric(),
            _quartic_lattice(),
            _matrix_preset("brinkmann", "Brinkmann's 4x4 linear matrix; its determinant is smooth away from three primes", BRINKMANN_SINGULAR_PRIMES),
            _matrix_preset("fggl", "Linear matrix with a smooth determinant in characteristic 2", FGGL_SINGULAR_PRIMES),
        )
    }


def get_preset(name: str) -> Preset:
    available = presets()
    if name not in available:
        raise UnknownPresetError(f"unknown preset {name!r}; available: {sorted(available)}")
    return available[name]


def preset_parameters(name: str, command: Command) -> dict[str, Any]:
    """
    Raises:
        UnknownPresetError: for an unknown name
        ExperimentUsageError: if the preset has nothing for this command
    """
    preset = get_preset(name)
    if command not in preset.parameters:
        raise ExperimentUsageError(f"preset {name!r} does not apply to {command.value}; it covers {preset.commands}")
    return dict(preset.parameters[command])
