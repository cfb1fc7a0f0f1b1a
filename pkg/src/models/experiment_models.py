"""
Experiment specification models.

Every command validates its parameters through one of the models below before
dispatch. The validated model, dumped to JSON, is what a report records as its
inputs and hashes.

Responsibility: Validated description of one CLI run before dispatch
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Command(str, Enum):
    """Experiment commands understood by the CLI"""
    HK_IDEAL = "hk-ideal"
    HK_REDUCE = "hk-reduce"
    HK_MONOMIAL = "hk-monomial"
    CONE_THRESHOLD = "cone-threshold"
    CONE_ORBIT = "cone-orbit"
    CONE_REPRESENTS = "cone-represents"
    LIMIT_SPLITTING = "limit-splitting"
    LIMIT_ORACLE = "limit-oracle"
    CHERN_CHECK = "chern-check"
    QUARTIC_DET = "quartic-det"
    QUARTIC_SCAN = "quartic-scan"
    QUARTIC_MINORS = "quartic-minors"
    PRESETS = "presets"


class SurfaceName(str, Enum):
    """Surfaces with shipped numerical data"""
    K3_QUARTIC = "k3-quartic"
    P1XP1 = "p1xp1"


class OracleKind(str, Enum):
    """Which Riemann sum the oracle evaluates"""
    SUM = "sum"            # sum_{0 <= m < nb} chi(nL + mH) / n^3
    H1 = "h1"              # -sum_{0 <= m < nu} chi(mH + nD) / n^3
    H1_Z = "h1-z"          # the same over |m| <= ceil(nu)


class ExperimentSpec(BaseModel):
    """
    One requested run: a command plus its command-specific parameters.

    Example:
        ExperimentSpec(command=Command.HK_IDEAL, parameters={"p": 2, "e_max": 3, ...})
    """
    command: Command = Field(description="Experiment to run")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Command-specific parameters")
    jobs: Optional[int] = Field(default=None, ge=1, description="Worker processes (HKLAB_JOBS when unset)")


class ExperimentParams(BaseModel):
    """Base for per-command parameters; unknown keys are rejected"""
    model_config = ConfigDict(extra="forbid")


# MARK: - Hilbert-Kunz


class HKIdealParams(ExperimentParams):
    """
    Colengths of R/I^[p^e] for e = e_min..e_max.

    This is also the JSON experiment descriptor:
    ``{p, variables, relations, ideal, e_max}``.
    """
    p: int = Field(default=2, ge=2, description="Characteristic")
    variables: List[str] = Field(default_factory=lambda: ["X", "Y", "Z", "W"])
    relations: List[str] = Field(default_factory=list, description="Generators of the defining ideal")
    ideal: List[str] = Field(min_length=1, description="Generators of the primary ideal I")
    e_min: int = Field(default=1, ge=0)
    e_max: int = Field(default=3, ge=0)
    dimension: Optional[int] = Field(default=None, ge=0, description="Krull dimension (variables - relations when unset)")
    compare_closed_form: bool = Field(default=False, description="Add the conjectural quadric closed form column")

    @model_validator(mode="after")
    def check_range(self) -> "HKIdealParams":
        if self.e_max < self.e_min:
            raise ValueError(f"e_max={self.e_max} is below e_min={self.e_min}")
        return self


class HKReduceParams(ExperimentParams):
    """Block-diagonal module data for the module-to-ideal reduction check"""
    p: int = Field(default=2, ge=2)
    variables: List[str] = Field(default_factory=lambda: ["X", "Y"])
    blocks: List[List[str]] = Field(
        default_factory=lambda: [["X^2", "X*Y", "Y^3"]],
        min_length=1,
        description="Generators of each cyclic summand R/b_k",
    )
    annihilator: Optional[List[str]] = Field(default=None, description="Generators of Ann M = intersection of the b_k")
    e_list: List[int] = Field(default_factory=lambda: [1, 2], min_length=1)

    @model_validator(mode="after")
    def fill_annihilator(self) -> "HKReduceParams":
        if self.annihilator is None:
            first = self.blocks[0]
            if any(block != first for block in self.blocks[1:]):
                raise ValueError("annihilator is required when the blocks differ")
            self.annihilator = list(first)
        if any(e < 0 for e in self.e_list):
            raise ValueError(f"Frobenius exponents must be nonnegative, got {self.e_list}")
        return self


class HKMonomialParams(ExperimentParams):
    """Monomial ideal in the polynomial ring, checked by two colength paths"""
    p: int = Field(default=2, ge=2)
    variables: List[str] = Field(default_factory=lambda: ["X", "Y", "Z"])
    monomials: List[str] = Field(default_factory=lambda: ["X^2", "Y^2", "Z^2", "X*Y"], min_length=1)
    e_list: List[int] = Field(default_factory=lambda: [1, 2, 3], min_length=1)


# MARK: - Lattices


class LatticeParams(ExperimentParams):
    gram: List[List[int]] = Field(default_factory=lambda: [[4, 2], [2, -4]])
    labels: List[str] = Field(default_factory=lambda: ["H", "D"])


class ConeThresholdParams(LatticeParams):
    H: List[int] = Field(default_factory=lambda: [1, 0], description="Ample class")
    D: Optional[List[int]] = Field(default=None, description="Second class spanning the plane for the boundary")
    L: List[List[int]] = Field(default_factory=list, description="Classes whose thresholds are wanted")


class ConeOrbitParams(LatticeParams):
    matrix: List[List[int]] = Field(default_factory=lambda: [[1, 1], [1, 2]])
    start: Optional[List[int]] = Field(default=None, description="First basis vector when unset")
    steps: int = Field(default=10, ge=0)
    inverse: bool = False


class ConeRepresentsParams(LatticeParams):
    c: List[int] = Field(default_factory=lambda: [-2, 0], min_length=1)
    m_bound: int = Field(default=100, ge=1)
    n_bound: int = Field(default=100, ge=1)


# MARK: - Limits


class LimitSplittingParams(ExperimentParams):
    surface: SurfaceName = SurfaceName.P1XP1
    summands: List[List[int]] = Field(default_factory=lambda: [[-4, -2], [-2, -4]], min_length=1)
    betti: Dict[str, List[int]] = Field(
        default_factory=lambda: {"0": [0], "1": [1, 1, 1, 1], "2": [2, 2, 2, 2, 2]},
        description="Punctured resolution shifts by homological level",
    )


class LimitOracleParams(ExperimentParams):
    surface: SurfaceName = SurfaceName.K3_QUARTIC
    kind: OracleKind = OracleKind.SUM
    L: List[int] = Field(default_factory=lambda: [-2, 1], description="Class for the threshold sum")
    D: Optional[List[int]] = Field(default=None, description="Class orthogonalized against H for the h1 sums")
    ns: List[int] = Field(default_factory=lambda: [16, 64, 256, 1024], min_length=1)

    @model_validator(mode="after")
    def check_positive(self) -> "LimitOracleParams":
        if any(n < 1 for n in self.ns):
            raise ValueError(f"n must be positive, got {self.ns}")
        return self


class ChernCheckParams(ExperimentParams):
    deltas: List[int] = Field(default_factory=lambda: list(range(1, 11)), min_length=1)

    @model_validator(mode="after")
    def check_positive(self) -> "ChernCheckParams":
        if any(d < 1 for d in self.deltas):
            raise ValueError(f"delta must be positive, got {self.deltas}")
        return self


# MARK: - Determinantal quartics


class QuarticParams(ExperimentParams):
    matrix: List[List[str]] = Field(description="4x4 array of linear forms in X, Y, Z, W")


class QuarticDetParams(QuarticParams):
    expected_det: Optional[str] = Field(default=None, description="Known determinant to compare against")


class QuarticScanParams(QuarticParams):
    primes: List[int] = Field(default_factory=lambda: list(range(2, 101)), min_length=1)
    known_singular: Optional[List[int]] = Field(default=None, description="Published singular primes")


class QuarticMinorsParams(QuarticParams):
    expected_minors: Optional[List[str]] = Field(default=None, description="Known curve generators, up to sign")
    primes: List[int] = Field(default_factory=lambda: [2, 3, 101], min_length=1)


class PresetsParams(ExperimentParams):
    pass
