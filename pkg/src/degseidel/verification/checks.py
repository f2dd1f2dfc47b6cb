"""
Identity checks over exact bivariate polynomials.

Every check compares two independently computed sides and records the exact
difference. A failing identity never raises: it becomes a CheckResult with
the residual, so one run reports everything that is wrong.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra import (
    BiPoly,
    egf_eval_lambda,
    falling_factorial_at,
    poly_eval_lambda,
    poly_eval_x,
    poly_substitute_x,
)
from ..config import SuiteConfig
from ..seidel import (
    SeidelMode,
    SeidelMatrix,
    binomial_transform,
    build,
    classical_generating_law,
    final_from_initial,
    initial_from_final,
    inverse_binomial_transform,
    seidel_generating_law,
)
from ..sequences import (
    SequenceKind,
    SequenceRoute,
    SequenceTable,
    build_table,
    classical_bernoulli_numbers,
    classical_bernoulli_polynomials,
    classical_euler_at_zero,
    classical_euler_polynomials,
    classical_genocchi_numbers,
    classical_genocchi_polynomials,
    genocchi_from_bernoulli,
)
from .printed import Transcription, load_transcription
from .result_types import CheckFailure, CheckGroup, CheckResult

logger = logging.getLogger(__name__)

Tables = Mapping[SequenceKind, SequenceTable]
Seed = Tuple[str, Tuple[BiPoly, ...]]
Residuals = Iterable[Tuple[int, str, BiPoly]]

X = BiPoly.x()
LAMBDA = BiPoly.lam()
X_MINUS_LAMBDA = X - LAMBDA
X_PLUS_ONE_MINUS_LAMBDA = X + 1 - LAMBDA

RANDOM_SEED_LENGTH = 11


def _collect(
    check_id: str,
    anchor: str,
    n_range: Tuple[int, int],
    residuals: Residuals,
    group: CheckGroup = CheckGroup.CONSISTENCY,
) -> CheckResult:
    failures = []
    comparisons = 0
    for n, label, residual in residuals:
        comparisons += 1
        if residual:
            failures.append(CheckFailure(n=n, residual=residual, label=label))
    result = CheckResult.from_failures(check_id, n_range, anchor, failures, comparisons, group)
    logger.info(
        f"{check_id}: {result.status.value} ({result.summary})",
        extra={"check_id": check_id, "status": result.status.value, "comparisons": comparisons},
    )
    return result


def _tables(n_max: int, tables: Optional[Tables] = None) -> Dict[SequenceKind, SequenceTable]:
    """Recurrence-route tables for every family, reusing the supplied ones."""
    out = dict(tables or {})
    for kind in SequenceKind:
        if kind not in out or out[kind].n_max < n_max:
            out[kind] = build_table(kind, n_max)
    return out


# Shift identities

def bernoulli_shift_rhs(poly: BiPoly, n: int) -> BiPoly:
    """n(x-λ)_{n-1,λ} + β_{n,λ}(x-λ)"""
    lower = poly_substitute_x(poly, X_MINUS_LAMBDA)
    if n == 0:
        return lower
    return n * falling_factorial_at(X_MINUS_LAMBDA, n - 1) + lower


def euler_shift_rhs(poly: BiPoly, n: int) -> BiPoly:
    """2(x-λ)_{n,λ} - 𝓔_{n,λ}(x-λ)"""
    return 2 * falling_factorial_at(X_MINUS_LAMBDA, n) - poly_substitute_x(poly, X_MINUS_LAMBDA)


def genocchi_shift_rhs(poly: BiPoly, n: int) -> BiPoly:
    """2n(x-λ)_{n-1,λ} - 𝓖_{n,λ}(x-λ)"""
    lower = poly_substitute_x(poly, X_MINUS_LAMBDA)
    if n == 0:
        return -lower
    return 2 * n * falling_factorial_at(X_MINUS_LAMBDA, n - 1) - lower


SHIFT_RHS: Dict[SequenceKind, Callable[[BiPoly, int], BiPoly]] = {
    SequenceKind.BERNOULLI: bernoulli_shift_rhs,
    SequenceKind.EULER: euler_shift_rhs,
    SequenceKind.GENOCCHI: genocchi_shift_rhs,
}

SHIFT_ANCHORS = {
    SequenceKind.BERNOULLI: "β_n(x+1-λ) = n(x-λ)_{n-1,λ} + β_n(x-λ)",
    SequenceKind.EULER: "𝓔_n(x+1-λ) = 2(x-λ)_{n,λ} - 𝓔_n(x-λ)",
    SequenceKind.GENOCCHI: "𝓖_n(x+1-λ) = 2n(x-λ)_{n-1,λ} - 𝓖_n(x-λ)",
}


def _check_shift(kind: SequenceKind, n_max: int, tables: Optional[Tables]) -> CheckResult:
    table = _tables(n_max, tables)[kind]
    rhs = SHIFT_RHS[kind]

    def residuals() -> Residuals:
        for n in range(n_max + 1):
            poly = table.polynomials[n]
            yield n, f"n={n}", poly_substitute_x(poly, X_PLUS_ONE_MINUS_LAMBDA) - rhs(poly, n)

    return _collect(f"shift.{kind.value}", SHIFT_ANCHORS[kind], (0, n_max), residuals())


def check_bernoulli_shift_identity(n_max: int, tables: Optional[Tables] = None) -> CheckResult:
    """β_{n,λ}(x+1-λ) - n(x-λ)_{n-1,λ} - β_{n,λ}(x-λ) = 0 for n ≤ n_max."""
    return _check_shift(SequenceKind.BERNOULLI, n_max, tables)


def check_euler_shift_identity(n_max: int, tables: Optional[Tables] = None) -> CheckResult:
    """𝓔_{n,λ}(x+1-λ) + 𝓔_{n,λ}(x-λ) - 2(x-λ)_{n,λ} = 0 for n ≤ n_max."""
    return _check_shift(SequenceKind.EULER, n_max, tables)


def check_genocchi_shift_identity(n_max: int, tables: Optional[Tables] = None) -> CheckResult:
    """𝓖_{n,λ}(x+1-λ) + 𝓖_{n,λ}(x-λ) - 2n(x-λ)_{n-1,λ} = 0 for n ≤ n_max."""
    return _check_shift(SequenceKind.GENOCCHI, n_max, tables)


# Sequence consistency

def check_route_agreement(n_max: int, tables: Optional[Tables] = None) -> List[CheckResult]:
    """Recurrence and series routes give identical numbers and polynomials."""
    results = []
    for kind, table in _tables(n_max, tables).items():
        other_route = SequenceRoute.SERIES if table.route is SequenceRoute.RECURRENCE else SequenceRoute.RECURRENCE
        other = build_table(kind, n_max, other_route)

        def residuals(table=table, other=other) -> Residuals:
            for n in range(n_max + 1):
                yield n, f"number n={n}", table.numbers[n] - other.numbers[n]
                yield n, f"polynomial n={n}", table.polynomials[n] - other.polynomials[n]

        results.append(_collect(
            f"routes.{kind.value}",
            f"{kind.symbol}_n by recurrence = {kind.symbol}_n by generating function",
            (0, n_max),
            residuals(),
        ))
    return results


def _delta(i: int, n: int) -> int:
    return 1 if i == n else 0


def check_boundary_and_relations(n_max: int, tables: Optional[Tables] = None) -> List[CheckResult]:
    """
    Boundary identities of the three families and their mutual relations.

    - β_n(1) - β_n = δ_{1,n}
    - 𝓔_n(1) + 𝓔_n = 2δ_{0,n}
    - 𝓖_n(1) + 𝓖_n = 2δ_{1,n}
    - 𝓖_{n,λ} = 2(β_{n,λ} - 2^n β_{n,λ/2})
    - 𝓖_{n,λ} = n·𝓔_{n-1,λ}
    """
    tables = _tables(n_max, tables)
    beta = tables[SequenceKind.BERNOULLI]
    euler = tables[SequenceKind.EULER]
    genocchi = tables[SequenceKind.GENOCCHI]

    def boundary(table: SequenceTable, sign: int, delta_at: int, scale: int) -> Residuals:
        for n in range(n_max + 1):
            at_one = poly_eval_x(table.polynomials[n], 1)
            yield n, f"n={n}", at_one + sign * table.numbers[n] - scale * _delta(delta_at, n)

    combined = genocchi_from_bernoulli(n_max, beta.numbers)

    def from_bernoulli() -> Residuals:
        for n in range(n_max + 1):
            yield n, f"n={n}", genocchi.numbers[n] - combined[n]

    def from_euler() -> Residuals:
        yield 0, "n=0", genocchi.numbers[0]
        for n in range(1, n_max + 1):
            yield n, f"n={n}", genocchi.numbers[n] - n * euler.numbers[n - 1]

    return [
        _collect("boundary.bernoulli", "β_n(1) - β_n = δ_{1,n}", (0, n_max), boundary(beta, -1, 1, 1)),
        _collect("boundary.euler", "𝓔_n(1) + 𝓔_n = 2δ_{0,n}", (0, n_max), boundary(euler, 1, 0, 2)),
        _collect("boundary.genocchi", "𝓖_n(1) + 𝓖_n = 2δ_{1,n}", (0, n_max), boundary(genocchi, 1, 1, 2)),
        _collect(
            "relations.genocchi_from_bernoulli",
            "𝓖_{n,λ} = 2(β_{n,λ} - 2^n β_{n,λ/2})",
            (0, n_max),
            from_bernoulli(),
        ),
        _collect("relations.genocchi_from_euler", "𝓖_{n,λ} = n 𝓔_{n-1,λ}", (0, n_max), from_euler()),
    ]


# Euler-Seidel matrices

def random_seeds(config: Optional[SuiteConfig] = None) -> List[Seed]:
    """
    Deterministic random rational seeds of length 11.

    The same config always yields the same seeds, whatever n_max is.
    """
    config = config or SuiteConfig()
    rng = random.Random(config.random_seed)
    seeds = []
    for i in range(config.random_sequences):
        values = tuple(
            BiPoly.constant(Fraction(
                rng.randint(-config.max_numerator, config.max_numerator),
                rng.randint(1, config.max_denominator),
            ))
            for _ in range(RANDOM_SEED_LENGTH)
        )
        seeds.append((f"random[{i}]", values))
    return seeds


def polynomial_seeds(n_max: int, tables: Optional[Tables] = None) -> List[Seed]:
    """The three polynomial families as seeds, 0..n_max."""
    tables = _tables(n_max, tables)
    return [(kind.value, tables[kind].polynomials[: n_max + 1]) for kind in SequenceKind]


def _matrices(n_max: int, seeds: Sequence[Seed]) -> List[Tuple[str, Tuple[BiPoly, ...], SeidelMatrix]]:
    out = []
    for name, seed in seeds:
        size = min(n_max, len(seed) - 1)
        out.append((name, seed[: size + 1], build(seed, size)))
    return out


def check_seidel_transforms(
    n_max: int,
    tables: Optional[Tables] = None,
    config: Optional[SuiteConfig] = None,
) -> List[CheckResult]:
    """
    Recursive fill against the closed forms, the inversion and the
    generating-function law, for random rational seeds and the three
    polynomial families.
    """
    tables = _tables(n_max, tables)
    seeds = random_seeds(config) + polynomial_seeds(n_max, tables)
    filled = _matrices(n_max, seeds)
    seed_range = (0, n_max)

    def closed_form() -> Residuals:
        for name, seed, matrix in filled:
            for n in range(matrix.size + 1):
                yield n, f"{name} n={n}", final_from_initial(seed, n) - matrix.entry(n, 0)

    def inversion() -> Residuals:
        for name, seed, matrix in filled:
            final = matrix.final_sequence
            for n in range(matrix.size + 1):
                yield n, f"{name} n={n}", initial_from_final(final, n) - seed[n]

    def round_trip() -> Residuals:
        for name, seed, matrix in filled:
            forward = [final_from_initial(seed, n) for n in range(matrix.size + 1)]
            backward = [initial_from_final(seed, n) for n in range(matrix.size + 1)]
            for n in range(matrix.size + 1):
                yield n, f"{name} forward n={n}", initial_from_final(forward, n) - seed[n]
                yield n, f"{name} backward n={n}", final_from_initial(backward, n) - seed[n]

    def generating_law() -> Residuals:
        for name, seed, matrix in filled:
            _, transformed = seidel_generating_law(seed, matrix.size)
            for n in range(matrix.size + 1):
                yield n, f"{name} n={n}", transformed.coefficient(n) - matrix.entry(n, 0)

    def final_sequence() -> Residuals:
        for kind in SequenceKind:
            polys = tables[kind].polynomials
            matrix = next(m for name, _, m in filled if name == kind.value)
            for n in range(matrix.size + 1):
                final = matrix.entry(n, 0)
                yield n, f"{kind.value} shifted n={n}", final - poly_substitute_x(polys[n], X_PLUS_ONE_MINUS_LAMBDA)
                yield n, f"{kind.value} identity n={n}", final - SHIFT_RHS[kind](polys[n], n)

    def classical_reduction() -> Residuals:
        for name, seed, matrix in filled:
            at_zero = [poly_eval_lambda(p, 0) for p in seed]
            classical = build(seed, matrix.size, SeidelMode.CLASSICAL)
            for k, n, value in classical.entries():
                yield k + n, f"{name} k={k},n={n}", value - binomial_transform(at_zero[n:], k)

    return [
        _collect("seidel.closed_form", "a_{n,0} = Σ C(n,k)(1-λ)_{n-k,λ} a_{0,k}", seed_range, closed_form()),
        _collect("seidel.inversion", "a_{0,n} = Σ C(n,k)(-1)^{n-k}<1-λ>_{n-k,λ} a_{k,0}", seed_range, inversion()),
        _collect("seidel.round_trip", "closed form and inversion are mutually inverse", seed_range, round_trip()),
        _collect("seidel.generating_law", "Ā_λ(x,t) = e_λ^{1-λ}(t) A_λ(x,t)", seed_range, generating_law()),
        _collect("seidel.final_sequence", "a_{n,0} = p_n(x+1-λ) for the polynomial seeds", seed_range, final_sequence()),
        _collect("seidel.classical_reduction", "λ = 0 matrix: a_{k,n} = Σ C(k,j) a_{0,n+j}", seed_range, classical_reduction()),
    ]


# Classical degeneration

def _classical_oracle(kind: SequenceKind, n_max: int) -> Tuple[List[Fraction], List[List[Fraction]]]:
    if kind is SequenceKind.BERNOULLI:
        return classical_bernoulli_numbers(n_max), classical_bernoulli_polynomials(n_max)
    if kind is SequenceKind.EULER:
        return classical_euler_at_zero(n_max), classical_euler_polynomials(n_max)
    return classical_genocchi_numbers(n_max), classical_genocchi_polynomials(n_max)


def check_classical_degeneration(
    n_max: int,
    tables: Optional[Tables] = None,
    config: Optional[SuiteConfig] = None,
) -> List[CheckResult]:
    """
    λ := 0 limits against the classical oracle, and the degenerate Seidel
    formulas against the classical binomial pair and e^t A(t).
    """
    tables = _tables(n_max, tables)
    results = []

    for kind in SequenceKind:
        table = tables[kind]
        numbers, polynomials = _classical_oracle(kind, n_max)

        def residuals(table=table, numbers=numbers, polynomials=polynomials) -> Residuals:
            for n in range(n_max + 1):
                yield n, f"number n={n}", poly_eval_lambda(table.numbers[n], 0) - BiPoly.constant(numbers[n])
                expected = BiPoly.from_univariate_x(polynomials[n])
                yield n, f"polynomial n={n}", poly_eval_lambda(table.polynomials[n], 0) - expected

        results.append(_collect(
            f"classical.{kind.value}",
            f"{kind.symbol}_n at λ = 0 equals the classical value",
            (0, n_max),
            residuals(),
        ))

    seeds = random_seeds(config) + polynomial_seeds(n_max, tables)

    def binomial_pair() -> Residuals:
        for name, seed in seeds:
            size = min(n_max, len(seed) - 1)
            at_zero = [poly_eval_lambda(p, 0) for p in seed[: size + 1]]
            for n in range(size + 1):
                forward = poly_eval_lambda(final_from_initial(seed, n), 0)
                yield n, f"{name} forward n={n}", forward - binomial_transform(at_zero, n)
                backward = poly_eval_lambda(initial_from_final(seed, n), 0)
                yield n, f"{name} inverse n={n}", backward - inverse_binomial_transform(at_zero, n)

    def generating_law() -> Residuals:
        for name, seed in seeds:
            size = min(n_max, len(seed) - 1)
            at_zero = [poly_eval_lambda(p, 0) for p in seed[: size + 1]]
            _, degenerate = seidel_generating_law(seed, size)
            _, classical = classical_generating_law(at_zero, size)
            degenerate = egf_eval_lambda(degenerate, 0)
            for n in range(size + 1):
                yield n, f"{name} n={n}", degenerate.coefficient(n) - classical.coefficient(n)
        ones = [BiPoly.one()] * (n_max + 1)
        matrix = build(ones, n_max, SeidelMode.CLASSICAL)
        _, law = classical_generating_law(ones, n_max)
        for n in range(n_max + 1):
            yield n, f"ones fill n={n}", matrix.entry(n, 0) - BiPoly.constant(2 ** n)
            yield n, f"ones law n={n}", law.coefficient(n) - BiPoly.constant(2 ** n)

    results.append(_collect(
        "classical.binomial_pair",
        "λ = 0: a_{n,0} = Σ C(n,k) a_{0,k} and its inverse",
        (0, n_max),
        binomial_pair(),
    ))
    results.append(_collect("classical.generating_law", "λ = 0: Ā(t) = e^t A(t)", (0, n_max), generating_law()))
    return results


# Transcribed values

def check_printed_tables(
    n_max: int,
    tables: Optional[Tables] = None,
    transcription: Optional[Transcription] = None,
    include_disputed: bool = False,
) -> List[CheckResult]:
    """
    Printed numbers minus computed numbers, per family.

    Disputed entries are skipped unless include_disputed is set; entries
    above n_max are never compared.
    """
    tables = _tables(n_max, tables)
    transcription = transcription or load_transcription()
    results = []
    for kind in SequenceKind:
        printed = transcription.table(kind)
        numbers = tables[kind].numbers

        def residuals(printed=printed, numbers=numbers) -> Residuals:
            for entry in printed.entries:
                if entry.n > n_max or (entry.disputed and not include_disputed):
                    continue
                yield entry.n, entry.label, entry.to_poly() - numbers[entry.n]

        results.append(_collect(
            f"printed.table.{kind.value}",
            f"printed {kind.symbol}_n table",
            (0, n_max),
            residuals(),
            CheckGroup.PRINTED,
        ))
    return results


def check_matrix_displays(
    n_max: int = 3,
    tables: Optional[Tables] = None,
    transcription: Optional[Transcription] = None,
    include_disputed: bool = False,
) -> List[CheckResult]:
    """
    Printed Euler-Seidel matrix entries minus the recursive fill, seeded with
    each polynomial family. Only entries with k + n ≤ n_max are compared;
    elided entries are simply absent from the transcription.
    """
    tables = _tables(n_max, tables)
    transcription = transcription or load_transcription()
    results = []
    for kind in SequenceKind:
        printed = transcription.matrix(kind)
        wanted = [
            entry for entry in printed.entries
            if entry.index <= n_max and (include_disputed or not entry.disputed)
        ]
        size = max((entry.index for entry in wanted), default=0)
        matrix = build(tables[kind].polynomials, size)

        def residuals(wanted=wanted, matrix=matrix) -> Residuals:
            for entry in wanted:
                yield entry.index, entry.label, entry.to_poly() - matrix.entry(entry.k, entry.n)

        results.append(_collect(
            f"printed.matrix.{kind.value}",
            f"printed Euler-Seidel matrix seeded with {kind.symbol}_n(x)",
            (0, n_max),
            residuals(),
            CheckGroup.PRINTED,
        ))
    return results
