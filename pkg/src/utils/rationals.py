from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_PATTERN = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?")


class RationalFormatError(ValueError):
    pass


def parse_fraction(text: str) -> Fraction:
    """Parse `"p/q"` or `"p"` into an exact Fraction. Decimal and float syntax is rejected."""
    match = _RATIONAL_PATTERN.fullmatch(text)
    if match is None:
        msg = f"Not an exact rational: {text!r}"
        raise RationalFormatError(msg)

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        msg = f"Zero denominator: {text!r}"
        raise RationalFormatError(msg)

    return Fraction(numerator, denominator)


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
