"""
Human-readable renderings of BiPoly values.

Both renderings follow the canonical term order (x powers descending, then
λ powers descending) so output is byte-deterministic.
"""

from fractions import Fraction
from typing import Callable, List

from .bipoly import BiPoly
from .rational import format_rational


def _plain_monomial(deg_x: int, deg_lambda: int) -> str:
    parts = []
    if deg_x:
        parts.append("x" if deg_x == 1 else f"x^{deg_x}")
    if deg_lambda:
        parts.append("λ" if deg_lambda == 1 else f"λ^{deg_lambda}")
    return "".join(parts)


def _plain_coefficient(magnitude: Fraction, monomial: str) -> str:
    if not monomial:
        return format_rational(magnitude)
    if magnitude == 1:
        return monomial
    if magnitude.denominator == 1:
        return f"{magnitude.numerator}{monomial}"
    return f"({format_rational(magnitude)}){monomial}"


def _latex_monomial(deg_x: int, deg_lambda: int) -> str:
    parts = []
    if deg_x:
        parts.append("x" if deg_x == 1 else f"x^{{{deg_x}}}")
    if deg_lambda:
        parts.append("\\lambda" if deg_lambda == 1 else f"\\lambda^{{{deg_lambda}}}")
    return "".join(parts)


def _latex_coefficient(magnitude: Fraction, monomial: str) -> str:
    if magnitude.denominator == 1:
        if monomial and magnitude == 1:
            return monomial
        return f"{magnitude.numerator}{monomial}"
    return f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}{monomial}"


def _join(poly: BiPoly, monomial: Callable[[int, int], str], coefficient: Callable[[Fraction, str], str]) -> str:
    pieces: List[str] = []
    for index, (dx, dl, c) in enumerate(poly.sorted_terms()):
        body = coefficient(abs(c), monomial(dx, dl))
        if index == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces) if pieces else "0"


def format_plain(poly: BiPoly) -> str:
    """Plain text, e.g. ``x^2 - xλ - (1/2)λ + 1/6``."""
    return _join(poly, _plain_monomial, _plain_coefficient)


def format_latex(poly: BiPoly) -> str:
    """LaTeX with \\frac coefficients, e.g. ``x^{2} - x\\lambda + \\frac{1}{6}``."""
    return _join(poly, _latex_monomial, _latex_coefficient)
