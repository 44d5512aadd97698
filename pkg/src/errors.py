"""
Exception hierarchy for FamCake.

Every error subclasses ``ValueError`` so callers that only guard against
bad input keep working.
"""
from typing import Optional


class FamCakeError(ValueError):
    """Base class for all library errors."""


class CakeDomainError(FamCakeError):
    """An interval reaches outside the cake [0, 1]."""


class InfeasibleTargetError(FamCakeError):
    """A mark was requested for more value than remains to the right."""


class MalformedPieceError(FamCakeError):
    """Intervals overlap or are reversed."""


class MeasureError(FamCakeError):
    """A value measure violates its breakpoint, density or normalization rules."""


class InstanceError(FamCakeError):
    """Families, weights or generator parameters are invalid."""


class UnsupportedCombinationError(FamCakeError):
    """A protocol was asked to run in a regime it does not support."""


class SchemaError(FamCakeError):
    """A JSON document does not follow the expected schema."""

    def __init__(self, field: str, message: str):
        """Initialize schema error.

        Args:
            field: Dotted path of the offending field, e.g. ``families[0].weight``
            message: What is wrong with it
        """
        super().__init__(f"{field}: {message}")
        self.field = field


class FixtureParseError(FamCakeError):
    """A fixture file could not be parsed at all."""

    def __init__(self, path: str, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = path if line is None else f"{path}:{line}:{column}"
        super().__init__(f"{location}: {message}")
        self.path = path
        self.line = line
        self.column = column


class SearchLimitError(FamCakeError):
    """An exhaustive search visited more nodes than allowed."""

    def __init__(self, limit: int):
        super().__init__(f"search exceeded the node limit of {limit} (raise FAMCAKE_SEARCH_LIMIT to allow more)")
        self.limit = limit
