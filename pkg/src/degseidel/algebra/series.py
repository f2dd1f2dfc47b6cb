"""
Truncated exponential generating functions with BiPoly coefficients.

An EgfSeries of order N stands for Σ_{n=0}^{N} a_n t^n/n!. Products are
binomial convolutions, so every identity stated in EGF coefficients becomes a
coefficient-wise comparison. Orders are explicit: combining series of
different orders is an error, never a silent truncation.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Tuple, Union

from ..errors import AlgebraError, NonZeroConstantTermError, NotInvertibleError, OrderMismatchError
from .bipoly import BiPoly, poly_add, poly_eval_lambda, poly_mul, poly_neg, poly_scale
from .factorials import falling_factorials_at
from .rational import RationalLike

logger = logging.getLogger(__name__)

Coefficient = Union[BiPoly, int, Fraction]


def _as_poly(value: Coefficient) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    return BiPoly.constant(value)


@dataclass(frozen=True)
class EgfSeries:
    """Σ_{n≤order} coeffs[n]·t^n/n!, truncated at `order`"""
    order: int
    coeffs: Tuple[BiPoly, ...]

    def __post_init__(self):
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"series order must be a nonnegative integer, got {self.order!r}")
        coeffs = tuple(_as_poly(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Coefficient]) -> "EgfSeries":
        values = tuple(coeffs)
        return cls(order=len(values) - 1, coeffs=values)

    def coefficient(self, n: int) -> BiPoly:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "EgfSeries":
        """Explicitly drop coefficients above `order`."""
        if order > self.order:
            raise OrderMismatchError(self.order, order)
        return EgfSeries(order=order, coeffs=self.coeffs[: order + 1])

    def __add__(self, other: "EgfSeries") -> "EgfSeries":
        return egf_add(self, other)

    def __sub__(self, other: "EgfSeries") -> "EgfSeries":
        return egf_sub(self, other)

    def __neg__(self) -> "EgfSeries":
        return EgfSeries(self.order, tuple(poly_neg(c) for c in self.coeffs))

    def __mul__(self, other: object) -> "EgfSeries":
        if isinstance(other, EgfSeries):
            return egf_mul(self, other)
        if isinstance(other, (BiPoly, int, Fraction)) and not isinstance(other, bool):
            return egf_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__


def _require_same_order(f: EgfSeries, g: EgfSeries) -> None:
    if f.order != g.order:
        raise OrderMismatchError(f.order, g.order)


def constant_series(value: Coefficient, order: int) -> EgfSeries:
    """The series whose only nonzero coefficient is a_0 = value."""
    return EgfSeries(order, (_as_poly(value),) + (BiPoly.zero(),) * order)


def egf_add(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _require_same_order(f, g)
    return EgfSeries(f.order, tuple(poly_add(a, b) for a, b in zip(f.coeffs, g.coeffs)))


def egf_sub(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _require_same_order(f, g)
    return EgfSeries(f.order, tuple(poly_add(a, poly_neg(b)) for a, b in zip(f.coeffs, g.coeffs)))


def egf_scale(f: EgfSeries, factor: Coefficient) -> EgfSeries:
    """Multiply every coefficient by a constant or a polynomial free of t."""
    if isinstance(factor, BiPoly):
        return EgfSeries(f.order, tuple(poly_mul(c, factor) for c in f.coeffs))
    return EgfSeries(f.order, tuple(poly_scale(c, factor) for c in f.coeffs))


def egf_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """
    Product of two EGFs: c_n = Σ_{k=0}^{n} C(n,k) a_k b_{n-k}.

    Raises:
        OrderMismatchError: If the orders differ
    """
    _require_same_order(f, g)
    out = []
    for n in range(f.order + 1):
        total = BiPoly.zero()
        for k in range(n + 1):
            a = f.coeffs[k]
            b = g.coeffs[n - k]
            if a and b:
                total = poly_add(total, poly_scale(poly_mul(a, b), comb(n, k)))
        out.append(total)
    return EgfSeries(f.order, tuple(out))


def egf_reciprocal(f: EgfSeries) -> EgfSeries:
    """
    Multiplicative inverse up to the truncation order.

    g_0 = 1/f_0 and g_n = -(1/f_0)·Σ_{k=1}^{n} C(n,k) f_k g_{n-k}.

    Raises:
        NotInvertibleError: If f_0 is not a nonzero constant
    """
    leading = f.coeffs[0]
    if leading.is_zero() or not leading.is_constant():
        raise NotInvertibleError(f"constant coefficient {leading} is not a nonzero rational")
    inverse = 1 / leading.constant_term()
    g = [BiPoly.constant(inverse)]
    for n in range(1, f.order + 1):
        total = BiPoly.zero()
        for k in range(1, n + 1):
            a = f.coeffs[k]
            if a:
                total = poly_add(total, poly_scale(poly_mul(a, g[n - k]), comb(n, k)))
        g.append(poly_scale(total, -inverse))
    return EgfSeries(f.order, tuple(g))


def degenerate_exponential(exponent: Coefficient, order: int) -> EgfSeries:
    """
    e_λ^s(t) truncated at `order`: coefficient n is (s)_{n,λ}.

    Args:
        exponent: The polynomial s (x, 1, 1-λ, x-λ, ...)
        order: Truncation order
    """
    s = _as_poly(exponent)
    logger.debug(f"degenerate exponential e_λ^({s}) to order {order}")
    return EgfSeries(order, falling_factorials_at(s, order))


def egf_shift_down(f: EgfSeries) -> EgfSeries:
    """
    (f(t) - f(0))/t for f(0) = 0: order drops by one, b_n = a_{n+1}/(n+1).

    Raises:
        NonZeroConstantTermError: If f has a nonzero constant coefficient
    """
    if f.coeffs[0]:
        raise NonZeroConstantTermError(f"cannot divide by t: constant coefficient is {f.coeffs[0]}")
    if f.order == 0:
        raise AlgebraError("cannot divide a series of order 0 by t")
    return EgfSeries(
        f.order - 1,
        tuple(poly_scale(f.coeffs[n + 1], Fraction(1, n + 1)) for n in range(f.order)),
    )


def egf_shift_up(f: EgfSeries) -> EgfSeries:
    """t·f(t) at the same order: c_0 = 0, c_n = n·a_{n-1}; a_order is dropped."""
    coeffs = [BiPoly.zero()]
    coeffs.extend(poly_scale(f.coeffs[n - 1], n) for n in range(1, f.order + 1))
    return EgfSeries(f.order, tuple(coeffs))


def egf_eval_lambda(f: EgfSeries, value: RationalLike) -> EgfSeries:
    """Coefficient-wise λ := value."""
    return EgfSeries(f.order, tuple(poly_eval_lambda(c, value) for c in f.coeffs))
