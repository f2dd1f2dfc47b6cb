"""
degseidel: exact degenerate Bernoulli, Euler and Genocchi polynomials,
degenerate Euler-Seidel matrices, and mechanical identity verification.
"""

__version__ = "0.1.0"
