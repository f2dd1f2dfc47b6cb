"""
Result types for identity verification.

A check compares computed polynomials (or computed against printed ones) for a
range of indices. Every comparison is exact: a failure carries the nonzero
residual left by the symbolic difference.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from ..algebra import BiPoly


class CheckStatus(Enum):
    """Status of a check"""
    PASSED = "pass"
    FAILED = "fail"


class CheckGroup(Enum):
    """Internal consistency versus comparison with transcribed values"""
    CONSISTENCY = "consistency"
    PRINTED = "printed"


@dataclass(frozen=True)
class CheckFailure:
    """One failing comparison"""
    n: int
    residual: BiPoly
    label: str = ""


@dataclass
class CheckResult:
    """Result of one identity check"""
    check_id: str
    n_range: Tuple[int, int]
    status: CheckStatus
    anchor: str
    group: CheckGroup = CheckGroup.CONSISTENCY
    residual: Optional[BiPoly] = None
    failures: List[CheckFailure] = field(default_factory=list)
    comparisons: int = 0

    def __post_init__(self):
        if (self.status is CheckStatus.PASSED) != (self.residual is None):
            raise ValueError(f"{self.check_id}: status {self.status.value} with residual {self.residual!r}")
        if self.residual is not None and self.residual.is_zero():
            raise ValueError(f"{self.check_id}: a reported residual must be nonzero")

    @property
    def passed(self) -> bool:
        """Check if every comparison held exactly"""
        return self.status is CheckStatus.PASSED

    @classmethod
    def from_failures(
        cls,
        check_id: str,
        n_range: Tuple[int, int],
        anchor: str,
        failures: List[CheckFailure],
        comparisons: int,
        group: CheckGroup = CheckGroup.CONSISTENCY,
    ) -> "CheckResult":
        """Pass when no failures were collected; otherwise report the first residual."""
        if failures:
            return cls(
                check_id=check_id,
                n_range=n_range,
                status=CheckStatus.FAILED,
                anchor=anchor,
                group=group,
                residual=failures[0].residual,
                failures=list(failures),
                comparisons=comparisons,
            )
        return cls(
            check_id=check_id,
            n_range=n_range,
            status=CheckStatus.PASSED,
            anchor=anchor,
            group=group,
            comparisons=comparisons,
        )

    @property
    def summary(self) -> str:
        if self.passed:
            return f"{self.comparisons} comparisons exact"
        return f"{len(self.failures)} of {self.comparisons} comparisons failed"


@dataclass
class VerificationReport:
    """All checks of one suite run, in registration order"""
    n_max: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, check_id: str) -> CheckResult:
        for check in self.checks:
            if check.check_id == check_id:
                return check
        raise KeyError(check_id)

    def get_failure_summary(self) -> str:
        """Get a summary of failures"""
        failures = [f"{check.check_id}: {check.summary}" for check in self.failed_checks]
        return ", ".join(failures) if failures else "No failures"
