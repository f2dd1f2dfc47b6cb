"""
Degenerate falling and rising factorials.

    (s)_{0,λ} = 1,  (s)_{n,λ} = s(s-λ)(s-2λ)...(s-(n-1)λ)
    <s>_{0,λ} = 1,  <s>_{n,λ} = s(s+λ)(s+2λ)...(s+(n-1)λ)

Both reduce to s^n at λ = 0.

Products are built one factor at a time. For the arguments the engine uses
over and over (x, 1, 1-λ, x-λ) the first CACHE_ORDERS + 1 products are kept;
any other argument, or a higher order, is multiplied out from the nearest
kept product.
"""

from typing import Dict, List, Tuple

from .bipoly import BiPoly, poly_add, poly_mul, poly_neg, poly_scale

CACHE_ORDERS = 64

FALLING = -1
RISING = 1

_ONE = BiPoly.one()
_X = BiPoly.x()
_LAMBDA = BiPoly.lam()

CACHED_ARGUMENTS = frozenset({
    _X,
    _ONE,
    poly_add(_ONE, poly_neg(_LAMBDA)),
    poly_add(_X, poly_neg(_LAMBDA)),
})

# (argument, direction) -> [(s)_0, (s)_1, ...] up to CACHE_ORDERS
_prefixes: Dict[Tuple[BiPoly, int], List[BiPoly]] = {}


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"factorial order must be a nonnegative integer, got {n!r}")


def _next_factor(value: BiPoly, s: BiPoly, m: int, direction: int) -> BiPoly:
    # product of order m times (s ± mλ)
    return poly_mul(value, poly_add(s, poly_scale(_LAMBDA, direction * m)))


def _factorial(s: BiPoly, n: int, direction: int) -> BiPoly:
    _check_order(n)
    if s in CACHED_ARGUMENTS:
        prefix = _prefixes.setdefault((s, direction), [_ONE])
        while len(prefix) <= min(n, CACHE_ORDERS):
            prefix.append(_next_factor(prefix[-1], s, len(prefix) - 1, direction))
        if n < len(prefix):
            return prefix[n]
        value, m = prefix[-1], len(prefix) - 1
    else:
        value, m = _ONE, 0
    while m < n:
        value = _next_factor(value, s, m, direction)
        m += 1
    return value


def falling_factorial_at(s: BiPoly, n: int) -> BiPoly:
    """(s)_{n,λ} for an arbitrary argument polynomial s."""
    return _factorial(s, n, FALLING)


def rising_factorial_at(s: BiPoly, n: int) -> BiPoly:
    """<s>_{n,λ} for an arbitrary argument polynomial s."""
    return _factorial(s, n, RISING)


def falling_factorials_at(s: BiPoly, order: int) -> Tuple[BiPoly, ...]:
    """(s)_{0,λ}, ..., (s)_{order,λ} in one pass."""
    _check_order(order)
    if s in CACHED_ARGUMENTS:
        values = [falling_factorial_at(s, n) for n in range(min(order, CACHE_ORDERS) + 1)]
    else:
        values = [_ONE]
    while len(values) <= order:
        values.append(_next_factor(values[-1], s, len(values) - 1, FALLING))
    return tuple(values)


def falling_factorial(n: int) -> BiPoly:
    """(x)_{n,λ} as a polynomial in x and λ."""
    return falling_factorial_at(_X, n)


def rising_factorial(n: int) -> BiPoly:
    """<x>_{n,λ} as a polynomial in x and λ."""
    return rising_factorial_at(_X, n)


def cached_factorial_orders() -> Dict[Tuple[BiPoly, int], int]:
    """Highest kept order per (argument, direction), for inspection."""
    return {key: len(prefix) - 1 for key, prefix in _prefixes.items()}
