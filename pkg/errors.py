# errors.py
"""
Exception hierarchy for the toolkit
"""


class DbfError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class FieldError(DbfError, ValueError):
    """Invalid field parameters, modulus, or mixed-field arithmetic."""


class ConstructionError(DbfError, ValueError):
    """A constructor's preconditions or self-validation failed."""


class DesignError(DbfError, ValueError):
    """Inconsistent design parameters or subgroups."""


class SequenceError(DbfError, ValueError):
    """Sequence requested outside the prime-field case."""


class SearchBudgetError(DbfError, RuntimeError):
    """Enumeration would exceed the configured candidate budget."""


class ArtifactError(DbfError, ValueError):
    """A JSON artifact is malformed or of the wrong kind."""


class UsageError(DbfError, ValueError):
    """Command-line arguments that parse but make no sense together."""
