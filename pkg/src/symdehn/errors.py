"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class FieldMismatchError(ValueError):
    """Arithmetic between elements of two different quadratic fields."""


class ConductorLimitError(RuntimeError):
    """A cyclotomic computation would exceed the configured conductor cap."""


class InternalConsistencyError(AssertionError):
    """A proven identity failed to hold; signals a bug, never a user verdict."""
