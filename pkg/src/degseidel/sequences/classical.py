"""
Classical (λ = 0) Bernoulli, Euler and Genocchi values.

An independent oracle for the degenerate tables: plain Fraction lists and the
classical recurrences, sharing no code with the BiPoly machinery.
"""

from fractions import Fraction
from math import comb
from typing import List


def classical_bernoulli_numbers(n_max: int) -> List[Fraction]:
    """B_0..B_{n_max} with B_1 = -1/2, from Σ_{k=0}^{n} C(n+1,k) B_k = 0."""
    numbers: List[Fraction] = []
    for n in range(n_max + 1):
        if n == 0:
            numbers.append(Fraction(1))
            continue
        total = sum((comb(n + 1, k) * numbers[k] for k in range(n)), Fraction(0))
        numbers.append(-total / (n + 1))
    return numbers


def classical_euler_at_zero(n_max: int) -> List[Fraction]:
    """E_0(0)..E_{n_max}(0) from Σ_{k=0}^{n} C(n,k) E_k(0) + E_n(0) = 2δ_{0,n}."""
    values: List[Fraction] = []
    for n in range(n_max + 1):
        total = sum((comb(n, k) * values[k] for k in range(n)), Fraction(0))
        values.append((Fraction(2 if n == 0 else 0) - total) / 2)
    return values


def classical_genocchi_numbers(n_max: int) -> List[Fraction]:
    """G_0..G_{n_max} via G_n = 2(1 - 2^n) B_n."""
    return [2 * (1 - 2 ** n) * b for n, b in enumerate(classical_bernoulli_numbers(n_max))]


def _appell(numbers: List[Fraction]) -> List[List[Fraction]]:
    """p_n(x) = Σ C(n,k) numbers[k] x^{n-k}, as coefficient lists indexed by power of x."""
    polys = []
    for n in range(len(numbers)):
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            coeffs[n - k] += comb(n, k) * numbers[k]
        polys.append(coeffs)
    return polys


def classical_bernoulli_polynomials(n_max: int) -> List[List[Fraction]]:
    """B_n(x) coefficient lists (index = power of x)."""
    return _appell(classical_bernoulli_numbers(n_max))


def classical_euler_polynomials(n_max: int) -> List[List[Fraction]]:
    """E_n(x) coefficient lists (index = power of x)."""
    return _appell(classical_euler_at_zero(n_max))


def classical_genocchi_polynomials(n_max: int) -> List[List[Fraction]]:
    """G_n(x) coefficient lists (index = power of x)."""
    return _appell(classical_genocchi_numbers(n_max))
