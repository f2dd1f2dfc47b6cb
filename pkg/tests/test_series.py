"""
Tests for truncated exponential generating functions.
"""

from fractions import Fraction as F

import pytest

from degseidel.algebra import (
    BiPoly,
    EgfSeries,
    constant_series,
    degenerate_exponential,
    egf_add,
    egf_eval_lambda,
    egf_mul,
    egf_reciprocal,
    egf_scale,
    egf_shift_down,
    egf_shift_up,
    egf_sub,
    falling_factorial_at,
)
from degseidel.errors import AlgebraError, NonZeroConstantTermError, NotInvertibleError, OrderMismatchError

X = BiPoly.x()
L = BiPoly.lam()


def test_degenerate_exponential_coefficients():
    series = degenerate_exponential(1, 4)
    assert series.order == 4
    assert series.coeffs == tuple(falling_factorial_at(BiPoly.one(), n) for n in range(5))
    assert series.coefficient(3) == 1 - 3 * L + 2 * L ** 2


def test_exponential_law():
    # e_λ^a(t)·e_λ^b(t) = e_λ^{a+b}(t)
    product = degenerate_exponential(X, 10) * degenerate_exponential(1 - L, 10)
    assert product == degenerate_exponential(X + 1 - L, 10)


def test_classical_limit_of_exponential():
    limit = egf_eval_lambda(degenerate_exponential(1, 4), 0)
    assert limit.coeffs == (BiPoly.one(),) * 5


def test_exponential_at_lambda_one_is_polynomial():
    # e_1(t) = 1 + t
    values = egf_eval_lambda(degenerate_exponential(1, 4), 1).coeffs
    assert values == (BiPoly.one(), BiPoly.one(), BiPoly.zero(), BiPoly.zero(), BiPoly.zero())


def test_reciprocal():
    f = degenerate_exponential(X, 5)
    assert egf_mul(f, egf_reciprocal(f)) == constant_series(1, 5)


def test_reciprocal_of_exponential_plus_one():
    f = egf_add(degenerate_exponential(1, 12), constant_series(1, 12))
    assert egf_mul(f, egf_reciprocal(f)) == constant_series(1, 12)


def test_reciprocal_of_exponential_minus_one_over_t():
    f = egf_shift_down(egf_sub(degenerate_exponential(1, 13), constant_series(1, 13)))
    assert f.order == 12
    assert f.coeffs[0] == BiPoly.one()
    assert egf_mul(f, egf_reciprocal(f)) == constant_series(1, 12)


def test_reciprocal_of_rational_constant():
    f = constant_series(F(2, 3), 3)
    assert egf_reciprocal(f) == constant_series(F(3, 2), 3)


@pytest.mark.parametrize("leading", [BiPoly.zero(), L, X + 1])
def test_reciprocal_requires_nonzero_constant(leading):
    with pytest.raises(NotInvertibleError):
        egf_reciprocal(constant_series(leading, 3))


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        egf_mul(degenerate_exponential(1, 3), degenerate_exponential(1, 4))
    with pytest.raises(OrderMismatchError):
        degenerate_exponential(1, 3) + degenerate_exponential(1, 2)


def test_truncate():
    f = degenerate_exponential(X, 5)
    assert f.truncate(2).coeffs == f.coeffs[:3]
    with pytest.raises(OrderMismatchError):
        f.truncate(6)


def test_shift_down_and_up():
    f = degenerate_exponential(X, 5)
    assert egf_shift_down(egf_shift_up(f)) == f.truncate(4)


def test_shift_down_needs_zero_constant():
    with pytest.raises(NonZeroConstantTermError):
        egf_shift_down(degenerate_exponential(1, 3))


def test_shift_down_of_order_zero():
    with pytest.raises(AlgebraError):
        egf_shift_down(constant_series(0, 0))


def test_shift_down_divides_by_t():
    # (e_λ(t) - 1)/t has coefficients (1)_{n+1,λ}/(n+1)
    e = degenerate_exponential(1, 4)
    shifted = egf_shift_down(e - constant_series(1, 4))
    assert shifted.coeffs[0] == BiPoly.one()
    assert shifted.coeffs[1] == (1 - L) / 2
    assert shifted.coeffs[2] == (1 - 3 * L + 2 * L ** 2) / 3


def test_scale_by_polynomial_and_scalar():
    f = degenerate_exponential(1, 2)
    assert egf_scale(f, X).coeffs == tuple(c * X for c in f.coeffs)
    assert (2 * f).coeffs == tuple(2 * c for c in f.coeffs)


def test_series_validation():
    with pytest.raises(ValueError):
        EgfSeries(2, (BiPoly.one(),))
    with pytest.raises(ValueError):
        EgfSeries(-1, ())
    with pytest.raises(IndexError):
        constant_series(1, 2).coefficient(3)


def test_from_coefficients_coerces_scalars():
    series = EgfSeries.from_coefficients([1, F(1, 2), X])
    assert series.order == 2
    assert series.coeffs == (BiPoly.one(), BiPoly.constant(F(1, 2)), X)
