"""
Rational helpers: the "p/q" string codec used by every JSON document.
"""
from fractions import Fraction
from typing import Any

from .errors import SchemaError


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "p/q" (integers too, e.g. "1/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(raw: Any, field: str) -> Fraction:
    """Parse a "p/q" string (or a plain integer) from a JSON document.

    Args:
        raw: Raw JSON value
        field: Dotted field path used in error messages

    Returns:
        The parsed Fraction
    """
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise SchemaError(field, f"expected a rational string like '1/3', got {raw!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(field, f"not a rational: {raw!r}")
