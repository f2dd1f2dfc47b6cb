"""
Classical and degenerate Euler-Seidel matrices.
"""

from .matrix import SeidelMode, SeidelMatrix, seidel_weight, build
from .transforms import (
    ONE_MINUS_LAMBDA,
    final_from_initial,
    initial_from_final,
    seidel_generating_law,
    binomial_transform,
    inverse_binomial_transform,
    classical_generating_law,
)

__all__ = [
    "SeidelMode",
    "SeidelMatrix",
    "seidel_weight",
    "build",
    "ONE_MINUS_LAMBDA",
    "final_from_initial",
    "initial_from_final",
    "seidel_generating_law",
    "binomial_transform",
    "inverse_binomial_transform",
    "classical_generating_law",
]
