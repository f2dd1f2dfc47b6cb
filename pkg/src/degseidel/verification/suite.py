"""
Verification suite.

Runs every identity check in a fixed order against one shared set of
sequence tables and assembles the report.
"""

import logging
from typing import Dict, Optional

from ..config import SuiteConfig
from ..sequences import SequenceKind, SequenceTable, build_table
from .checks import (
    check_boundary_and_relations,
    check_bernoulli_shift_identity,
    check_classical_degeneration,
    check_euler_shift_identity,
    check_genocchi_shift_identity,
    check_matrix_displays,
    check_printed_tables,
    check_route_agreement,
    check_seidel_transforms,
)
from .printed import Transcription, load_transcription
from .result_types import VerificationReport

logger = logging.getLogger(__name__)


class IdentitySuite:
    """
    Orchestrates one verification run.

    Handles:
    1. Building the three sequence tables once
    2. Running consistency checks, then comparisons with printed values
    3. Collecting results in registration order
    """

    def __init__(
        self,
        n_max: int,
        include_disputed_tables: bool = False,
        include_disputed_matrices: bool = False,
        config: Optional[SuiteConfig] = None,
        transcription: Optional[Transcription] = None,
    ):
        """
        Initialize the suite.

        Args:
            n_max: Highest index checked
            include_disputed_tables: Also compare printed table entries known to be wrong
            include_disputed_matrices: Also compare printed matrix entries known to be wrong
            config: Random-seed settings (defaults from the environment)
            transcription: Printed values (defaults to the bundled file)
        """
        if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
            raise ValueError(f"n_max must be a nonnegative integer, got {n_max!r}")
        self.n_max = n_max
        self.include_disputed_tables = include_disputed_tables
        self.include_disputed_matrices = include_disputed_matrices
        self.config = config or SuiteConfig.from_env()
        self.transcription = transcription
        self._tables: Dict[SequenceKind, SequenceTable] = {}

    @property
    def tables(self) -> Dict[SequenceKind, SequenceTable]:
        if not self._tables:
            for kind in SequenceKind:
                self._tables[kind] = build_table(kind, self.n_max)
        return self._tables

    def run(self) -> VerificationReport:
        """
        Run every check.

        Returns:
            VerificationReport with checks in a fixed order
        """
        logger.info(f"verifying identities for n <= {self.n_max}", extra={"n_max": self.n_max})
        transcription = self.transcription or load_transcription()
        tables = self.tables
        n = self.n_max

        report = VerificationReport(n_max=n)
        report.checks.extend(check_route_agreement(n, tables))
        report.checks.extend(check_boundary_and_relations(n, tables))
        report.checks.append(check_bernoulli_shift_identity(n, tables))
        report.checks.append(check_euler_shift_identity(n, tables))
        report.checks.append(check_genocchi_shift_identity(n, tables))
        report.checks.extend(check_seidel_transforms(n, tables, self.config))
        report.checks.extend(check_classical_degeneration(n, tables, self.config))
        report.checks.extend(check_printed_tables(n, tables, transcription, self.include_disputed_tables))
        report.checks.extend(check_matrix_displays(n, tables, transcription, self.include_disputed_matrices))

        logger.info(
            f"{len(report.checks)} checks, {len(report.failed_checks)} failed: "
            f"{report.get_failure_summary()}",
            extra={"n_max": n, "status": "pass" if report.all_pass else "fail"},
        )
        return report


def run_all(
    n_max: int,
    include_disputed_tables: bool = False,
    include_disputed_matrices: bool = False,
    config: Optional[SuiteConfig] = None,
) -> VerificationReport:
    """Run the whole suite for n ≤ n_max."""
    suite = IdentitySuite(
        n_max,
        include_disputed_tables=include_disputed_tables,
        include_disputed_matrices=include_disputed_matrices,
        config=config,
    )
    return suite.run()
