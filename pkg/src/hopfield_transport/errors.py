"""Exception types raised across the package."""


class HopfieldError(Exception):
    """Base class for all package errors."""


class DomainError(HopfieldError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class NumericalError(HopfieldError, ArithmeticError):
    pass


class DegenerateError(HopfieldError):
    """No unique steady state exists (a polariton mode is decoupled from both baths)."""


class ConvergenceError(HopfieldError):
    """A truncated-Fock-space result did not stabilise under a cutoff increase."""


class ResourceError(HopfieldError):
    """Requested workspace exceeds the configured dimension cap."""


class StepSizeError(HopfieldError):
    pass


class ConfigError(HopfieldError, ValueError):
    pass
