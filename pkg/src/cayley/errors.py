"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InvariantViolation(AssertionError):
    """An internal arithmetic invariant failed; indicates a bug, not bad input."""
