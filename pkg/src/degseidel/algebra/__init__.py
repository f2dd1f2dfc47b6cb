"""
Exact algebra: rationals, bivariate polynomials in x and λ, and truncated
exponential generating functions.
"""

from .rational import (
    Rational,
    RationalLike,
    rat,
    as_rational,
    parse_rational,
    format_rational,
)
from .bipoly import (
    BiPoly,
    poly_add,
    poly_mul,
    poly_neg,
    poly_scale,
    poly_substitute_x,
    poly_eval_lambda,
    poly_scale_lambda,
    poly_eval_x,
)
from .factorials import (
    falling_factorial,
    rising_factorial,
    falling_factorial_at,
    rising_factorial_at,
    falling_factorials_at,
    cached_factorial_orders,
)
from .series import (
    EgfSeries,
    constant_series,
    egf_add,
    egf_sub,
    egf_scale,
    egf_mul,
    egf_reciprocal,
    degenerate_exponential,
    egf_shift_down,
    egf_shift_up,
    egf_eval_lambda,
)
from .formatting import format_plain, format_latex
from .records import TermRecord, TERM_LIST, poly_from_term_records

__all__ = [
    # Rationals
    "Rational",
    "RationalLike",
    "rat",
    "as_rational",
    "parse_rational",
    "format_rational",
    # Polynomials
    "BiPoly",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "poly_scale",
    "poly_substitute_x",
    "poly_eval_lambda",
    "poly_scale_lambda",
    "poly_eval_x",
    # Factorials
    "falling_factorial",
    "rising_factorial",
    "falling_factorial_at",
    "rising_factorial_at",
    "falling_factorials_at",
    "cached_factorial_orders",
    # Series
    "EgfSeries",
    "constant_series",
    "egf_add",
    "egf_sub",
    "egf_scale",
    "egf_mul",
    "egf_reciprocal",
    "degenerate_exponential",
    "egf_shift_down",
    "egf_shift_up",
    "egf_eval_lambda",
    # Rendering and schema
    "format_plain",
    "format_latex",
    "TermRecord",
    "TERM_LIST",
    "poly_from_term_records",
]
