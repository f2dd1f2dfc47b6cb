"""
Degenerate Euler-Seidel matrices.

    a_{0,n} = a_n
    a_{k,n} = (1 - (k-n)λ)·a_{k-1,n} + a_{k-1,n+1}

A seed of N+1 terms determines exactly the triangle k + n ≤ N. The fill is
always done with symbolic λ; the classical matrix (weight 1) and any numeric-λ
matrix are obtained afterwards by substituting λ entrywise.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence, Tuple

from ..algebra import BiPoly, RationalLike, poly_add, poly_eval_lambda, poly_mul
from ..errors import SequenceTooShortError

logger = logging.getLogger(__name__)


class SeidelMode(Enum):
    """Recurrence used for the fill"""
    CLASSICAL = "classical"    # a_{k-1,n} + a_{k-1,n+1}
    DEGENERATE = "degenerate"  # (1 - (k-n)λ) a_{k-1,n} + a_{k-1,n+1}


@dataclass(frozen=True)
class SeidelMatrix:
    """
    Triangular table a_{k,n}, k + n ≤ size.

    rows[k] holds a_{k,0}..a_{k,size-k}.
    """
    size: int
    mode: SeidelMode
    rows: Tuple[Tuple[BiPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if len(rows) != self.size + 1:
            raise ValueError(f"matrix of size {self.size} needs {self.size + 1} rows, got {len(rows)}")
        for k, row in enumerate(rows):
            if len(row) != self.size - k + 1:
                raise ValueError(f"row {k} needs {self.size - k + 1} entries, got {len(row)}")
        object.__setattr__(self, "rows", rows)

    def entry(self, k: int, n: int) -> BiPoly:
        if k < 0 or n < 0 or k + n > self.size:
            raise IndexError(f"entry ({k},{n}) outside the triangle k + n <= {self.size}")
        return self.rows[k][n]

    @property
    def initial_sequence(self) -> Tuple[BiPoly, ...]:
        """Row 0: a_{0,0}..a_{0,size}"""
        return self.rows[0]

    @property
    def final_sequence(self) -> Tuple[BiPoly, ...]:
        """Column 0: a_{0,0}..a_{size,0}"""
        return tuple(row[0] for row in self.rows)

    @property
    def entry_count(self) -> int:
        return (self.size + 1) * (self.size + 2) // 2

    def entries(self) -> Iterator[Tuple[int, int, BiPoly]]:
        """(k, n, a_{k,n}) row by row."""
        for k, row in enumerate(self.rows):
            for n, value in enumerate(row):
                yield k, n, value

    def evaluate_lambda(self, value: RationalLike, mode: Optional[SeidelMode] = None) -> "SeidelMatrix":
        """Entrywise λ := value."""
        return SeidelMatrix(
            size=self.size,
            mode=mode or self.mode,
            rows=tuple(tuple(poly_eval_lambda(p, value) for p in row) for row in self.rows),
        )


def seidel_weight(k: int, n: int) -> BiPoly:
    """1 - (k-n)λ"""
    return BiPoly({(0, 0): 1, (0, 1): -(k - n)})


def build(
    initial: Sequence[BiPoly],
    size: int,
    mode: SeidelMode = SeidelMode.DEGENERATE,
) -> SeidelMatrix:
    """
    Fill the Euler-Seidel triangle from a seed row.

    Args:
        initial: Seed a_{0,0}, a_{0,1}, ... (at least size+1 terms)
        size: N, the largest k + n stored
        mode: DEGENERATE keeps λ symbolic; CLASSICAL is the same fill at λ = 0

    Returns:
        SeidelMatrix with (N+1)(N+2)/2 entries

    Raises:
        SequenceTooShortError: If the seed has fewer than size+1 terms
    """
    if isinstance(size, bool) or not isinstance(size, int) or size < 0:
        raise ValueError(f"matrix size must be a nonnegative integer, got {size!r}")
    if len(initial) < size + 1:
        raise SequenceTooShortError(size + 1, len(initial))

    rows = [tuple(initial[: size + 1])]
    for k in range(1, size + 1):
        previous = rows[k - 1]
        rows.append(tuple(
            poly_add(poly_mul(seidel_weight(k, n), previous[n]), previous[n + 1])
            for n in range(size - k + 1)
        ))
    logger.debug(f"filled degenerate Euler-Seidel triangle of size {size}", extra={"size": size})

    matrix = SeidelMatrix(size=size, mode=SeidelMode.DEGENERATE, rows=tuple(rows))
    if mode is SeidelMode.CLASSICAL:
        return matrix.evaluate_lambda(0, mode=SeidelMode.CLASSICAL)
    return matrix
