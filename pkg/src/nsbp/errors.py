"""Exception hierarchy for the nsbp package.

Public functions raise these instead of bare ValueError so callers can
distinguish bad inputs from numerical breakdowns.
"""


class NsbpError(Exception):
    """Base class for all package errors."""


class DomainError(NsbpError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(NsbpError, ArithmeticError):
    """Evaluation requested exactly at a pole of the function."""


class PrecisionError(NsbpError, ArithmeticError):
    """The requested accuracy cannot be met at the working precision."""


class ConvergenceError(NsbpError, ArithmeticError):
    """An iterative scheme (series, quadrature, rejection loop) did not converge."""


class SingularCoefficientError(NsbpError, ArithmeticError):
    """A leading recurrence coefficient vanished for the given parameters."""


class UnsupportedParameterError(NsbpError, ValueError):
    """The operation has no defined value for this parameter combination."""
