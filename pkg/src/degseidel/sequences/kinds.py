"""
Sequence families and the immutable tables that hold them.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..algebra import BiPoly, poly_eval_x


class SequenceKind(Enum):
    """The three degenerate polynomial families"""
    BERNOULLI = "bernoulli"  # t/(e_λ(t)-1) · e_λ^x(t)
    EULER = "euler"          # 2/(e_λ(t)+1) · e_λ^x(t)
    GENOCCHI = "genocchi"    # 2t/(e_λ(t)+1) · e_λ^x(t)

    @property
    def symbol(self) -> str:
        """Plain-text symbol used in reports."""
        return {
            SequenceKind.BERNOULLI: "β",
            SequenceKind.EULER: "𝓔",
            SequenceKind.GENOCCHI: "𝓖",
        }[self]

    @property
    def latex_symbol(self) -> str:
        return {
            SequenceKind.BERNOULLI: "\\beta",
            SequenceKind.EULER: "\\mathcal{E}",
            SequenceKind.GENOCCHI: "\\mathcal{G}",
        }[self]


class SequenceRoute(Enum):
    """How a table was computed"""
    RECURRENCE = "recurrence"  # boundary recurrences solved term by term
    SERIES = "series"          # generating-function inversion


@dataclass(frozen=True)
class SequenceTable:
    """
    Degenerate numbers and polynomials of one family, indices 0..n_max.

    numbers[n] is the polynomial at x = 0 and never contains x.
    """
    kind: SequenceKind
    n_max: int
    numbers: Tuple[BiPoly, ...]
    polynomials: Tuple[BiPoly, ...]
    route: SequenceRoute = SequenceRoute.RECURRENCE

    def __post_init__(self):
        object.__setattr__(self, "numbers", tuple(self.numbers))
        object.__setattr__(self, "polynomials", tuple(self.polynomials))
        expected = self.n_max + 1
        if len(self.numbers) != expected or len(self.polynomials) != expected:
            raise ValueError(
                f"{self.kind.value} table to n={self.n_max} needs {expected} numbers and polynomials"
            )
        for n, (number, poly) in enumerate(zip(self.numbers, self.polynomials)):
            if number.has_x():
                raise ValueError(f"{self.kind.value} number {n} depends on x")
            if poly_eval_x(poly, 0) != number:
                raise ValueError(f"{self.kind.value} polynomial {n} does not reduce to its number at x = 0")
