"""
Degenerate Bernoulli, Euler and Genocchi numbers and polynomials.
"""

from .kinds import SequenceKind, SequenceRoute, SequenceTable
from .numbers import (
    unit_falling_factorial,
    bernoulli_numbers_recurrence,
    bernoulli_numbers_series,
    euler_numbers,
    genocchi_numbers,
    degenerate_numbers,
    polynomials_from_numbers,
    genocchi_from_bernoulli,
    build_table,
    classical_limit,
    number_series,
    family_generating_function,
)
from .classical import (
    classical_bernoulli_numbers,
    classical_euler_at_zero,
    classical_genocchi_numbers,
    classical_bernoulli_polynomials,
    classical_euler_polynomials,
    classical_genocchi_polynomials,
)

__all__ = [
    # Types
    "SequenceKind",
    "SequenceRoute",
    "SequenceTable",
    # Degenerate families
    "unit_falling_factorial",
    "bernoulli_numbers_recurrence",
    "bernoulli_numbers_series",
    "euler_numbers",
    "genocchi_numbers",
    "degenerate_numbers",
    "polynomials_from_numbers",
    "genocchi_from_bernoulli",
    "build_table",
    "classical_limit",
    "number_series",
    "family_generating_function",
    # Classical oracle
    "classical_bernoulli_numbers",
    "classical_euler_at_zero",
    "classical_genocchi_numbers",
    "classical_bernoulli_polynomials",
    "classical_euler_polynomials",
    "classical_genocchi_polynomials",
]
