"""Exception hierarchy shared by every module."""


class WradiiError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WradiiError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(WradiiError, ArithmeticError):
    """A series or an iteration failed to meet its stopping rule."""


class ScanExhaustedError(WradiiError):
    """Fewer zeros than requested were found below the scan ceiling.

    This signals that the ceiling was too low, not that the zeros are absent.
    """


class DoubleZeroError(WradiiError):
    """The scan saw the function approach zero without changing sign."""


class InvariantViolation(WradiiError, ArithmeticError):
    """A mathematical invariant that must hold was found broken."""
