"""Shared exception types."""


class CapacityError(RuntimeError):
    """Raised when a problem size exceeds the configured enumeration/simulation limit."""
