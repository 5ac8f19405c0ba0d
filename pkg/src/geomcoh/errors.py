"""Exception hierarchy shared across the package.

Validation failures carry the name of the violated invariant in the class
name so that front ends (CLI diagnostics, test assertions) can report it
without string matching on free-form messages.
"""


class CoherenceError(Exception):
    """Base class for all errors raised by this package."""


class StateValidationError(CoherenceError):
    """A raw matrix failed density-matrix validation."""


class NotSquareError(StateValidationError):
    pass


class NotHermitianError(StateValidationError):
    pass


class NotPositiveError(StateValidationError):
    pass


class TraceNotOneError(StateValidationError):
    pass


class NegativeEigenvalueError(CoherenceError):
    """A matrix expected to be PSD has an eigenvalue below the clamp tolerance."""


class DimensionMismatchError(CoherenceError):
    """Two states that must share a dimension do not."""


class OrderingViolationError(CoherenceError):
    """The sub/fidelity/super ordering broke beyond tolerance: numerical defect."""


class NotQubitError(CoherenceError):
    pass


class NotPureError(CoherenceError):
    pass


class BadParameterError(CoherenceError, ValueError):
    """A constructor or CLI parameter is outside its documented domain."""


class BadDimensionError(BadParameterError):
    pass


class BadRankError(BadParameterError):
    pass


class NotNormalizedError(BadParameterError):
    pass


class NegativeEntryError(BadParameterError):
    pass


class NonFiniteError(CoherenceError):
    """An objective evaluation returned NaN/Inf: upstream bug, never expected."""


class StateFileParseError(CoherenceError):
    """A state file is unreadable as the documented JSON schema."""
