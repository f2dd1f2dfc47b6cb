"""
Closed forms linking the initial row and the final column.

    a_{n,0} = Σ_{k=0}^{n} C(n,k) (1-λ)_{n-k,λ} a_{0,k}
    a_{0,n} = Σ_{k=0}^{n} C(n,k) (-1)^{n-k} <1-λ>_{n-k,λ} a_{k,0}

and the generating-function form  Ā_λ(x,t) = e_λ^{1-λ}(t)·A_λ(x,t).
At λ = 0 these collapse to the classical binomial transform pair and
Ā(t) = e^t A(t).
"""

from math import comb
from typing import Sequence, Tuple

from ..algebra import (
    BiPoly,
    EgfSeries,
    degenerate_exponential,
    egf_eval_lambda,
    egf_mul,
    falling_factorial_at,
    poly_add,
    poly_mul,
    poly_scale,
    rising_factorial_at,
)
from ..errors import SequenceTooShortError

ONE_MINUS_LAMBDA = BiPoly({(0, 0): 1, (0, 1): -1})


def _require(sequence: Sequence[BiPoly], n: int) -> None:
    if len(sequence) < n + 1:
        raise SequenceTooShortError(n + 1, len(sequence))


def final_from_initial(initial: Sequence[BiPoly], n: int) -> BiPoly:
    """a_{n,0} from the seed row."""
    _require(initial, n)
    total = BiPoly.zero()
    for k in range(n + 1):
        if initial[k]:
            weight = poly_scale(falling_factorial_at(ONE_MINUS_LAMBDA, n - k), comb(n, k))
            total = poly_add(total, poly_mul(weight, initial[k]))
    return total


def initial_from_final(final: Sequence[BiPoly], n: int) -> BiPoly:
    """a_{0,n} from the final column a_{0,0}..a_{n,0}."""
    _require(final, n)
    total = BiPoly.zero()
    for k in range(n + 1):
        if final[k]:
            sign = -1 if (n - k) % 2 else 1
            weight = poly_scale(rising_factorial_at(ONE_MINUS_LAMBDA, n - k), sign * comb(n, k))
            total = poly_add(total, poly_mul(weight, final[k]))
    return total


def seidel_generating_law(initial: Sequence[BiPoly], order: int) -> Tuple[EgfSeries, EgfSeries]:
    """
    (A, Ā) with A = Σ a_{0,n} t^n/n! and Ā = e_λ^{1-λ}(t)·A, both of `order`.

    Coefficient n of Ā equals final_from_initial(initial, n).
    """
    _require(initial, order)
    a = EgfSeries(order, tuple(initial[: order + 1]))
    return a, egf_mul(degenerate_exponential(ONE_MINUS_LAMBDA, order), a)


def binomial_transform(initial: Sequence[BiPoly], n: int) -> BiPoly:
    """Classical a_{n,0} = Σ C(n,k) a_{0,k}."""
    _require(initial, n)
    total = BiPoly.zero()
    for k in range(n + 1):
        total = poly_add(total, poly_scale(initial[k], comb(n, k)))
    return total


def inverse_binomial_transform(final: Sequence[BiPoly], n: int) -> BiPoly:
    """Classical a_{0,n} = Σ C(n,k) (-1)^{n-k} a_{k,0}."""
    _require(final, n)
    total = BiPoly.zero()
    for k in range(n + 1):
        sign = -1 if (n - k) % 2 else 1
        total = poly_add(total, poly_scale(final[k], sign * comb(n, k)))
    return total


def classical_generating_law(initial: Sequence[BiPoly], order: int) -> Tuple[EgfSeries, EgfSeries]:
    """(A, e^t·A) with the exponential taken at λ = 0."""
    _require(initial, order)
    a = EgfSeries(order, tuple(initial[: order + 1]))
    exponential = egf_eval_lambda(degenerate_exponential(1, order), 0)
    return a, egf_mul(exponential, a)
