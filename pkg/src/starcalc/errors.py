"""Exception hierarchy shared by all modules."""


class StarCalcError(Exception):
    """Base class for library errors."""


class BDomainError(StarCalcError, ValueError):
    """An argument lies outside the domain of an operation."""


class NotStarDifferentiable(BDomainError):
    """Polar Cauchy-Riemann conditions fail at the requested point."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class QuadratureError(StarCalcError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class ParseError(StarCalcError, ValueError):
    """Syntax error in an expression, with the byte offset of the fault."""

    def __init__(self, message, offset=0, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
        self.message = message
