"""Exception types raised across the package.

The hierarchy keeps user-facing parameter errors (bad sizes, degenerate
graphs) separate from contract violations (a caller handing in data that
breaks a documented invariant, e.g. a non-normalized state vector).
"""


class InvalidParameterError(ValueError):
    """A parameter is outside the supported range."""


class InvalidDimensionError(InvalidParameterError):
    """A matrix or vector dimension is empty or inconsistent."""


class DegenerateGraphError(InvalidParameterError):
    """The requested graph has no well-defined walk (e.g. degree zero)."""


class SizeLimitError(InvalidParameterError):
    """The requested instance exceeds the supported desk-scale size."""


class DegenerateChainError(InvalidParameterError):
    """A continuous-time chain with all rates zero was requested."""


class ContractViolationError(ValueError):
    """Input data violates a documented invariant of the operation."""


class ToleranceError(RuntimeError):
    """The requested accuracy cannot be met with the given parameters."""
