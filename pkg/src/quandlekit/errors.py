"""Shared exception types, mapped to CLI exit codes in cli.py."""


class ValidationFailure(ValueError):
    """Structured input (table, catalog record, flag) failed validation."""


class ResourceBoundExceeded(RuntimeError):
    """A configured enumeration bound would be exceeded."""
