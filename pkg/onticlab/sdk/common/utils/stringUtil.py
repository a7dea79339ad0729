"""
Utility functions for onticlab.
"""
import numbers
from fractions import Fraction
from typing import Any, Optional, Tuple


def format_number(value: Any) -> str:
    """
    Render a report cell.

    Floats use the shortest round-trip repr so identical values always give
    identical text; exact Fractions with denominator 1 print as integers.

    :param value: The cell value
    :return: Its textual form
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return repr(float(value))
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return repr(float(value))
    return str(value)


def json_number(value: Any) -> Any:
    """Convert a report cell into a JSON-native value."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    return str(value)


def split_assignment(line: str) -> Optional[Tuple[str, str]]:
    """
    Split a ``key=value`` line, dropping ``#`` comments.

    :return: (key, value), or None for blank and comment-only lines
    :raises ValueError: If a non-empty line has no ``=`` or an empty key
    """
    content = line.split("#", 1)[0].strip()
    if not content:
        return None
    if "=" not in content:
        raise ValueError(f"expected key=value, got '{content}'")
    key, value = content.split("=", 1)
    key = key.strip()
    if not key:
        raise ValueError("empty key")
    return key, value.strip()
