"""Exception types shared across the package."""


class CasimirPlasmaError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CasimirPlasmaError):
    """Invalid physical input or malformed configuration."""


class NumericalError(CasimirPlasmaError):
    """A series or quadrature failed to reach its accuracy target."""

    def __init__(self, message: str, achieved_error: float | None = None):
        if achieved_error is not None:
            message = f"{message} (achieved error estimate {achieved_error:.3e})"
        super().__init__(message)
        self.achieved_error = achieved_error
