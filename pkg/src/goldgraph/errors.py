"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class RangeError(ValueError):
    """An argument exceeds the range covered by a precomputed table."""


class ResourceLimitError(RuntimeError):
    """A configured resource budget (memory, search cap) would be exceeded."""


class CheckpointConfigError(RuntimeError):
    """A checkpoint does not match the current scan configuration."""
