"""
Exact rational coefficients.

Rationals are ``fractions.Fraction`` values: always reduced, denominator
positive, equality by (numerator, denominator).
"""

import re
from fractions import Fraction
from typing import Union

from ..errors import RationalParseError, ZeroDenominatorError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def rat(num: int, den: int = 1) -> Fraction:
    """
    Build a canonical rational num/den.

    Args:
        num: Numerator
        den: Denominator, nonzero

    Returns:
        Reduced Fraction with positive denominator

    Raises:
        ZeroDenominatorError: If den is zero
    """
    if den == 0:
        raise ZeroDenominatorError(f"zero denominator in {num}/{den}")
    return Fraction(int(num), int(den))


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """
    Parse ``p`` or ``p/q`` into a Fraction.

    Decimal points and exponents are rejected: every value stays exact.

    Raises:
        RationalParseError: If the text is not a rational literal
        ZeroDenominatorError: If q is zero
    """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise RationalParseError(f"not a rational literal: {text!r} (expected p or p/q)")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    return rat(num, den)


def format_rational(value: Fraction) -> str:
    """Render as ``p`` when integral, ``p/q`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
