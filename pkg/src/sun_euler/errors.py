"""Exception types shared across the package."""


class InvalidDimensionError(ValueError):
    """Group dimension outside the supported range."""


class DomainError(ValueError):
    """An angle lies outside the range an operation accepts."""


class ConsistencyError(RuntimeError):
    """A computed object violates an invariant it must satisfy by construction."""
