"""Exception hierarchy shared by all modules."""


class IsoperimError(Exception):
    """Base class for every error raised by :mod:`isoperim`."""


class RejectedInputError(IsoperimError, ValueError):
    """An argument violates the documented preconditions."""


class DegenerateInputError(RejectedInputError):
    """Input is lower-dimensional (collinear points, zero-area region)."""


class InfeasibleError(IsoperimError, ValueError):
    """A constraint set turned out to be empty."""


class UnsupportedOperationError(IsoperimError, TypeError):
    """The operation is not defined for this kind of region."""


class NumericalError(IsoperimError, RuntimeError):
    """An iterative method failed to reach its tolerance."""
