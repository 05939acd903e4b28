"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain where a closed form or series is defined."""


class PoleError(DomainError):
    """Evaluation requested at a pole (zeta at s = 1, gamma at 0, -1, ...)."""


class PreconditionError(ValueError):
    """A documented precondition on the arguments does not hold."""


class ToleranceUnreachableError(RuntimeError):
    """The requested tolerance cannot be met before the interval cap."""

    def __init__(self, message, achieved_bound):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class OverflowGuardError(RuntimeError):
    """Sampling stopped by the overflow guard before enough points existed."""
