"""Shared error types."""


class CapacityError(RuntimeError):
    """An enumeration or reachable-state search exceeded its configured cap."""
