# src/utils/errors.py
"""Exception hierarchy shared by the engine and mapped to CLI exit codes."""


class EngineError(Exception):
    """Base class for every error raised on purpose by the engine."""


class DomainError(EngineError, ValueError):
    """Bad user input: unknown type label, invalid face, malformed parameter."""


class CuspidalTableError(DomainError):
    """A cuspidal table file that does not follow the record grammar."""


class UnclassifiedCuspidalError(EngineError, LookupError):
    """No table record and no rule covers a Levi factor signature."""

    def __init__(self, key: str, face: str = ""):
        self.key = key
        self.face = face
        where = f" (face {face})" if face else ""
        super().__init__(f"unclassified cuspidal datum {key!r}{where}")


class EnumerationBudgetExceeded(EngineError, RuntimeError):
    """A BFS over a group exceeded the configured cap."""


class InvariantViolation(EngineError, RuntimeError):
    """An internal self-check failed. Always a bug, never bad input."""


class NonIntegralSeriesError(InvariantViolation):
    """A Hom series averaged to a non-integral or negative coefficient."""
