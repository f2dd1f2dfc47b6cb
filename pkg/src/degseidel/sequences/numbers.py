"""
Degenerate Bernoulli, Euler and Genocchi numbers and polynomials.

Each family is produced by two independent routes:

- recurrence: the boundary identities f(1) ∓ f(0) = δ solved term by term,
  with f(1) expanded through Σ C(n,k) f_k (1)_{n-k,λ};
- series: inversion of the generating function in truncated EGF arithmetic.

The routes must agree exactly; the verification suite checks that they do.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Tuple

from ..algebra import (
    BiPoly,
    EgfSeries,
    constant_series,
    degenerate_exponential,
    egf_add,
    egf_mul,
    egf_reciprocal,
    egf_scale,
    egf_shift_down,
    egf_shift_up,
    egf_sub,
    falling_factorial,
    falling_factorial_at,
    poly_add,
    poly_eval_lambda,
    poly_mul,
    poly_scale,
    poly_scale_lambda,
)
from .kinds import SequenceKind, SequenceRoute, SequenceTable

logger = logging.getLogger(__name__)

Values = Tuple[BiPoly, ...]


def _check_n_max(n_max: int) -> None:
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f"n_max must be a nonnegative integer, got {n_max!r}")


def unit_falling_factorial(m: int) -> BiPoly:
    """(1)_{m,λ}; shared by all three recurrences and cached in falling_factorial_at."""
    return falling_factorial_at(BiPoly.one(), m)


def _binomial_sum(n: int, values: Sequence[BiPoly], start: int, stop: int) -> BiPoly:
    """Σ_{k=start}^{stop-1} C(n,k)·(1)_{n-k,λ}·values[k]."""
    total = BiPoly.zero()
    for k in range(start, stop):
        if values[k]:
            term = poly_mul(unit_falling_factorial(n - k), values[k])
            total = poly_add(total, poly_scale(term, comb(n, k)))
    return total


def bernoulli_numbers_recurrence(n_max: int) -> Values:
    """
    β_{0,λ}..β_{n_max,λ} from Σ_{k=0}^{n} C(n,k)(1)_{n-k,λ}β_k - β_n = δ_{1,n}.

    The k = n term cancels against -β_n, so the instance at index n fixes
    β_{n-1}:  n·β_{n-1} = δ_{1,n} - Σ_{k=0}^{n-2} C(n,k)(1)_{n-k,λ}β_k.
    Index n = 1 gives β_0 = 1; indices 2..n_max+1 give the rest.
    """
    _check_n_max(n_max)
    beta = []
    for n in range(1, n_max + 2):
        delta = 1 if n == 1 else 0
        rhs = poly_add(BiPoly.constant(delta), -_binomial_sum(n, beta, 0, n - 1))
        beta.append(poly_scale(rhs, Fraction(1, n)))
    return tuple(beta)


def bernoulli_series(order: int) -> EgfSeries:
    """t/(e_λ(t)-1) as an EGF of the given order."""
    e = degenerate_exponential(1, order + 1)
    return egf_reciprocal(egf_shift_down(egf_sub(e, constant_series(1, order + 1))))


def euler_series(order: int) -> EgfSeries:
    """2/(e_λ(t)+1) as an EGF of the given order."""
    e = degenerate_exponential(1, order)
    return egf_scale(egf_reciprocal(egf_add(e, constant_series(1, order))), 2)


def genocchi_series(order: int) -> EgfSeries:
    """2t/(e_λ(t)+1): the Euler series multiplied by t."""
    return egf_shift_up(euler_series(order))


def number_series(kind: SequenceKind, order: int) -> EgfSeries:
    """Generating function of the degenerate numbers of `kind`."""
    builders = {
        SequenceKind.BERNOULLI: bernoulli_series,
        SequenceKind.EULER: euler_series,
        SequenceKind.GENOCCHI: genocchi_series,
    }
    return builders[kind](order)


def family_generating_function(kind: SequenceKind, order: int, argument: Optional[BiPoly] = None) -> EgfSeries:
    """
    number_series(kind)·e_λ^{argument}(t); coefficient n is the polynomial of
    index n evaluated at `argument` (default x).
    """
    argument = BiPoly.x() if argument is None else argument
    return egf_mul(number_series(kind, order), degenerate_exponential(argument, order))


def bernoulli_numbers_series(n_max: int) -> Values:
    """β_{0,λ}..β_{n_max,λ} as coefficients of t/(e_λ(t)-1)."""
    _check_n_max(n_max)
    return bernoulli_series(n_max).coeffs


def euler_numbers(n_max: int, route: SequenceRoute = SequenceRoute.RECURRENCE) -> Values:
    """
    𝓔_{0,λ}..𝓔_{n_max,λ}.

    recurrence: 2𝓔_n = 2δ_{0,n} - Σ_{k=0}^{n-1} C(n,k)(1)_{n-k,λ}𝓔_k
    series:     coefficients of 2/(e_λ(t)+1)
    """
    _check_n_max(n_max)
    if route is SequenceRoute.SERIES:
        return euler_series(n_max).coeffs
    values = []
    for n in range(n_max + 1):
        delta = 2 if n == 0 else 0
        rhs = poly_add(BiPoly.constant(delta), -_binomial_sum(n, values, 0, n))
        values.append(poly_scale(rhs, Fraction(1, 2)))
    return tuple(values)


def genocchi_numbers(n_max: int, route: SequenceRoute = SequenceRoute.RECURRENCE) -> Values:
    """
    𝓖_{0,λ}..𝓖_{n_max,λ} with 𝓖_0 = 0.

    recurrence: 2𝓖_n = 2δ_{1,n} - Σ_{k=1}^{n-1} C(n,k)(1)_{n-k,λ}𝓖_k
    series:     coefficients of t·2/(e_λ(t)+1)
    """
    _check_n_max(n_max)
    if route is SequenceRoute.SERIES:
        return genocchi_series(n_max).coeffs
    values = [BiPoly.zero()]
    for n in range(1, n_max + 1):
        delta = 2 if n == 1 else 0
        rhs = poly_add(BiPoly.constant(delta), -_binomial_sum(n, values, 1, n))
        values.append(poly_scale(rhs, Fraction(1, 2)))
    return tuple(values)


def degenerate_numbers(
    kind: SequenceKind,
    n_max: int,
    route: SequenceRoute = SequenceRoute.RECURRENCE,
) -> Values:
    """Numbers of any family by the requested route."""
    if kind is SequenceKind.BERNOULLI:
        if route is SequenceRoute.SERIES:
            return bernoulli_numbers_series(n_max)
        return bernoulli_numbers_recurrence(n_max)
    if kind is SequenceKind.EULER:
        return euler_numbers(n_max, route)
    return genocchi_numbers(n_max, route)


def polynomials_from_numbers(
    kind: SequenceKind,
    n_max: int,
    numbers: Optional[Sequence[BiPoly]] = None,
    route: SequenceRoute = SequenceRoute.RECURRENCE,
) -> Values:
    """
    Polynomials p_n(x) = Σ_{k=0}^{n} C(n,k)·numbers[k]·(x)_{n-k,λ}.

    Args:
        kind: Family, used when numbers are not supplied
        n_max: Highest index
        numbers: Precomputed numbers (at least n_max+1 of them)
        route: Route for computing the numbers when not supplied
    """
    _check_n_max(n_max)
    if numbers is None:
        numbers = degenerate_numbers(kind, n_max, route)
    if len(numbers) < n_max + 1:
        raise ValueError(f"need {n_max + 1} numbers, got {len(numbers)}")
    polys = []
    for n in range(n_max + 1):
        total = BiPoly.zero()
        for k in range(n + 1):
            if numbers[k]:
                term = poly_mul(numbers[k], falling_factorial(n - k))
                total = poly_add(total, poly_scale(term, comb(n, k)))
        polys.append(total)
    return tuple(polys)


def genocchi_from_bernoulli(n_max: int, bernoulli: Optional[Sequence[BiPoly]] = None) -> Values:
    """𝓖_{n,λ} = 2(β_{n,λ} - 2^n β_{n,λ/2}) for n = 0..n_max."""
    _check_n_max(n_max)
    beta = bernoulli if bernoulli is not None else bernoulli_numbers_recurrence(n_max)
    values = []
    for n in range(n_max + 1):
        halved = poly_scale_lambda(beta[n], Fraction(1, 2))
        values.append(poly_scale(poly_add(beta[n], poly_scale(halved, -(2 ** n))), 2))
    return tuple(values)


def build_table(
    kind: SequenceKind,
    n_max: int,
    route: SequenceRoute = SequenceRoute.RECURRENCE,
) -> SequenceTable:
    """
    Numbers and polynomials of one family.

    The series route reads the polynomials off number_series·e_λ^x(t); the
    recurrence route forms the binomial sums directly.
    """
    _check_n_max(n_max)
    logger.debug(
        f"building {kind.value} table to n={n_max} via {route.value}",
        extra={"kind": kind.value, "route": route.value, "n_max": n_max},
    )
    numbers = degenerate_numbers(kind, n_max, route)
    if route is SequenceRoute.SERIES:
        polynomials = family_generating_function(kind, n_max).coeffs
    else:
        polynomials = polynomials_from_numbers(kind, n_max, numbers)
    return SequenceTable(kind=kind, n_max=n_max, numbers=numbers, polynomials=polynomials, route=route)


def classical_limit(table: SequenceTable, polynomials: bool = False) -> Values:
    """Every number (or polynomial) of the table with λ := 0."""
    source = table.polynomials if polynomials else table.numbers
    return tuple(poly_eval_lambda(p, 0) for p in source)
