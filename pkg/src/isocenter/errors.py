"""Shared exception types."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 1)."""


class InternalInconsistencyError(RuntimeError):
    """Two routes that must agree exactly disagreed (CLI exit code 2)."""


class NonPeriodicError(RuntimeError):
    """An orbit failed to return to the section within the time budget."""
