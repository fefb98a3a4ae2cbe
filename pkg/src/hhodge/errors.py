"""Exception types shared across the calculator."""

from __future__ import annotations

__all__ = [
    "HurwitzHodgeError",
    "InadmissibleTypeError",
    "MissingGammaError",
    "DegenerateWeightError",
    "SingularMatrixError",
]


class HurwitzHodgeError(Exception):
    """Base class for calculator-specific failures."""


class InadmissibleTypeError(HurwitzHodgeError):
    """The stacky type cannot carry a nonzero integral (rank not a nonnegative integer)."""


class MissingGammaError(HurwitzHodgeError):
    """No seed vector is available for the requested (theory, N, g, type) key."""


class DegenerateWeightError(HurwitzHodgeError):
    """A surface block weight vanishes, so the scaled system is not defined."""


class SingularMatrixError(HurwitzHodgeError):
    """The coefficient system has no unique solution."""
