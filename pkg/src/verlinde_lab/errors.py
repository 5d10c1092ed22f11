"""Exception types shared across the package."""


class VerlindeLabError(Exception):
    """Base class for all library errors."""


class ValidationError(VerlindeLabError):
    """Malformed or inconsistent input (bad prime, mismatched p, bad index...)."""


class ExactDivisionError(ValidationError):
    """Raised when an exact quotient does not exist in the coefficient ring."""


class CapExceededError(VerlindeLabError):
    """A brute-force computation would exceed the configured dimension cap."""

    def __init__(self, needed, cap):
        super().__init__(
            f"computation needs {needed} columns, exceeding the cap of {cap} "
            f"(raise it via the cap argument or VERLINDE_LAB_CAP)"
        )
        self.needed = needed
        self.cap = cap


class ConventionError(VerlindeLabError):
    """A combinatorial convention self-check failed (greedy chain guard)."""
