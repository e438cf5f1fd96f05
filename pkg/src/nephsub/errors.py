"""Exception hierarchy shared by every module in :mod:`nephsub`."""


class NephsubError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NephsubError, ValueError):
    """An argument lies outside the closed unit disk."""


class BranchError(NephsubError):
    """A square root, logarithm or arctangent argument sits on its cut."""


class PoleError(NephsubError, ZeroDivisionError):
    """Evaluation at (or numerically at) a pole."""


class ParameterError(NephsubError, ValueError):
    """Parameters violate a stated hypothesis."""


class ConvergenceError(NephsubError, ArithmeticError):
    """No evaluation route applies for the requested arguments."""


class NonConvergentAtBoundary(ConvergenceError):
    """Hypergeometric series diverges on the unit circle (c - a - b <= 0)."""


class ToleranceNotMet(NephsubError, ArithmeticError):
    """Quadrature finished without reaching the requested tolerance."""


class NoBracket(NephsubError, ValueError):
    """Root finder was given an interval without a sign change."""


class MaxIterations(NephsubError, ArithmeticError):
    """An iterative method hit its iteration cap."""


class OracleInconclusive(NephsubError):
    """The ray-crossing oracle was asked about a point on the boundary."""


class SamplingError(NephsubError):
    """Too many boundary samples had to be skipped."""
