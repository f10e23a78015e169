"""Exception types raised across the package."""


class ML2Error(Exception):
    """Base class for all package errors."""


class PoleError(ML2Error, ValueError):
    """A Gamma-function argument sits on a pole (non-positive integer)."""


class NonConvergence(ML2Error, ArithmeticError):
    """A series or quadrature failed to reach its tolerance."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class UnknownPreset(ML2Error, KeyError):
    pass


class DomainError(ML2Error, ValueError):
    pass


class DegenerateExponent(ML2Error, ValueError):
    """Jacobi/Laguerre weight exponent <= -1 (non-integrable weight)."""


class NonFinite(ML2Error, ArithmeticError):
    pass


class PreconditionViolated(ML2Error, ValueError):
    pass


class NonIntegerExponent(ML2Error, ValueError):
    pass
