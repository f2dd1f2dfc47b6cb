"""
Identity verification for degenerate sequences and Euler-Seidel matrices.
"""

from .result_types import (
    CheckStatus,
    CheckGroup,
    CheckFailure,
    CheckResult,
    VerificationReport,
)
from .printed import (
    PrintedEntry,
    PrintedTable,
    PrintedMatrix,
    Transcription,
    load_transcription,
)
from .checks import (
    check_bernoulli_shift_identity,
    check_euler_shift_identity,
    check_genocchi_shift_identity,
    check_route_agreement,
    check_boundary_and_relations,
    check_seidel_transforms,
    check_classical_degeneration,
    check_printed_tables,
    check_matrix_displays,
    random_seeds,
    polynomial_seeds,
)
from .suite import IdentitySuite, run_all
from .reporter import VerificationReporter

__all__ = [
    # Result types
    "CheckStatus",
    "CheckGroup",
    "CheckFailure",
    "CheckResult",
    "VerificationReport",
    # Printed values
    "PrintedEntry",
    "PrintedTable",
    "PrintedMatrix",
    "Transcription",
    "load_transcription",
    # Checks
    "check_bernoulli_shift_identity",
    "check_euler_shift_identity",
    "check_genocchi_shift_identity",
    "check_route_agreement",
    "check_boundary_and_relations",
    "check_seidel_transforms",
    "check_classical_degeneration",
    "check_printed_tables",
    "check_matrix_displays",
    "random_seeds",
    "polynomial_seeds",
    # Suite
    "IdentitySuite",
    "run_all",
    "VerificationReporter",
]
