"""
Exception hierarchy for hklab.

Every error raised on purpose by the library derives from ``HKLabError`` so the
CLI can tell computation failures apart from programming errors.

Responsibility: Shared error types for all compute modules
"""

from typing import Optional


class HKLabError(Exception):
    """Base class for all library errors"""


class RadicandMismatchError(HKLabError, ValueError):
    """Raised when two quadratic numbers live in different fields Q(sqrt d)"""


class PolynomialSyntaxError(HKLabError, ValueError):
    """Raised by the polynomial parser; ``position`` is a 0-based offset"""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownIdentifierError(PolynomialSyntaxError):
    """Raised when an identifier is not a declared ring variable"""


class NotPrimeError(HKLabError, ValueError):
    """Raised when a modulus is not a prime below the supported bound"""


class NotPrimePowerError(HKLabError, ValueError):
    """Raised when a Frobenius exponent q is not a power of the characteristic"""


class ExponentOverflowError(HKLabError, OverflowError):
    """Raised when a monomial exponent leaves the 32-bit range"""


class InfiniteColengthError(HKLabError, ValueError):
    """Raised when a quotient is asked for its length but is not Artinian"""


class LatticeError(HKLabError, ValueError):
    """Raised for rank mismatches and degenerate lattice input"""


class NonIsometryError(LatticeError):
    """Raised when an orbit is requested for a matrix that is not an isometry"""


class ThresholdMismatchError(HKLabError, ValueError):
    """Raised when a supplied threshold is not a root of (bH + L)^2 = 0"""


class MalformedBettiTableError(HKLabError, ValueError):
    """Raised for Betti tables with missing or repeated homological levels"""


class ConsistencyError(HKLabError, RuntimeError):
    """Raised when two independent computations disagree (arithmetic bug trap)"""


class UnknownPresetError(HKLabError, KeyError):
    """Raised for a preset name that is not shipped"""


class ExperimentUsageError(HKLabError, ValueError):
    """Raised for invalid experiment parameters; the CLI exits with status 2"""


class ArityMismatchError(HKLabError, ValueError):
    """Raised when monomials or polynomials come from different rings"""


class DegenerateReductionError(HKLabError, ValueError):
    """Raised when an equation vanishes identically modulo a prime"""
