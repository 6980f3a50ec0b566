import re
from fractions import Fraction
from typing import Optional

from .exceptions import ParseError

RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(token: str, line: Optional[int] = None) -> Fraction:
    """Parse ``numerator[/denominator]``; decimals and floats are rejected."""
    if not RATIONAL_PATTERN.match(token):
        raise ParseError(f"expected numerator[/denominator], got {token!r}", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line)


def format_rational(value: Fraction, decimal: Optional[int] = None) -> str:
    """``p/q`` (or ``p`` when q = 1), or a fixed-point string rounded half-to-even."""
    value = Fraction(value)
    if decimal is None:
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if decimal < 0:
        raise ValueError("decimal digits must be non-negative")
    # round() on a Fraction is exact and rounds half to even.
    scaled = round(value * 10**decimal)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(decimal + 1, "0")
    if decimal == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-decimal]}.{digits[-decimal:]}"
