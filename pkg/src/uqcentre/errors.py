class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ResourceLimitError(RuntimeError):
    """A configurable enumeration cap was exceeded."""
