"""
Tests for the identity suite, result types, printed values and reports.
"""

import csv
import io
import json
from fractions import Fraction as F

import pytest

from degseidel.algebra import BiPoly
from degseidel.config import SuiteConfig
from degseidel.errors import TranscriptionError
from degseidel.sequences import SequenceKind, SequenceTable, build_table
from degseidel.verification import (
    CheckFailure,
    CheckGroup,
    CheckResult,
    CheckStatus,
    IdentitySuite,
    VerificationReporter,
    check_bernoulli_shift_identity,
    check_boundary_and_relations,
    check_classical_degeneration,
    check_euler_shift_identity,
    check_genocchi_shift_identity,
    check_matrix_displays,
    check_printed_tables,
    load_transcription,
    random_seeds,
    run_all,
)
from degseidel.verification.checks import bernoulli_shift_rhs

X = BiPoly.x()
L = BiPoly.lam()

SMALL_CONFIG = SuiteConfig(random_sequences=5)


@pytest.fixture(scope="module")
def full_report():
    return run_all(12, config=SuiteConfig())


@pytest.fixture(scope="module")
def disputed_report():
    return run_all(12, include_disputed_tables=True, config=SMALL_CONFIG)


class TestResultTypes:
    def test_passed_check_has_no_residual(self):
        with pytest.raises(ValueError):
            CheckResult("x", (0, 1), CheckStatus.PASSED, "anchor", residual=X)

    def test_failed_check_needs_nonzero_residual(self):
        with pytest.raises(ValueError):
            CheckResult("x", (0, 1), CheckStatus.FAILED, "anchor", residual=BiPoly.zero())
        with pytest.raises(ValueError):
            CheckResult("x", (0, 1), CheckStatus.FAILED, "anchor")

    def test_from_failures(self):
        failures = [CheckFailure(n=2, residual=L, label="n=2"), CheckFailure(n=3, residual=X, label="n=3")]
        result = CheckResult.from_failures("demo", (0, 3), "anchor", failures, comparisons=4)
        assert not result.passed
        assert result.residual == L
        assert result.summary == "2 of 4 comparisons failed"

        clean = CheckResult.from_failures("demo", (0, 3), "anchor", [], comparisons=4)
        assert clean.passed
        assert clean.residual is None


class TestFullSuite:
    def test_all_pass(self, full_report):
        assert full_report.all_pass
        assert full_report.failed_checks == []
        assert full_report.get_failure_summary() == "No failures"

    def test_check_order(self, full_report):
        ids = [check.check_id for check in full_report.checks]
        assert ids[:3] == ["routes.bernoulli", "routes.euler", "routes.genocchi"]
        assert ids[-3:] == ["printed.matrix.bernoulli", "printed.matrix.euler", "printed.matrix.genocchi"]
        assert len(ids) == len(set(ids)) == 28

    def test_groups(self, full_report):
        printed = [c.check_id for c in full_report.checks if c.group is CheckGroup.PRINTED]
        assert printed == [
            "printed.table.bernoulli",
            "printed.table.euler",
            "printed.table.genocchi",
            "printed.matrix.bernoulli",
            "printed.matrix.euler",
            "printed.matrix.genocchi",
        ]

    def test_every_check_compared_something(self, full_report):
        assert all(check.comparisons > 0 for check in full_report.checks)

    def test_n_max_zero(self):
        report = run_all(0, include_disputed_tables=True, include_disputed_matrices=True, config=SMALL_CONFIG)
        assert report.all_pass

    def test_deterministic(self):
        first = VerificationReporter.to_json(run_all(5, config=SMALL_CONFIG))
        second = VerificationReporter.to_json(run_all(5, config=SMALL_CONFIG))
        assert first == second

    def test_suite_rejects_negative_n(self):
        with pytest.raises(ValueError):
            IdentitySuite(-1)


class TestDisputedEntries:
    def test_exactly_three_failures(self, disputed_report):
        assert [c.check_id for c in disputed_report.failed_checks] == [
            "printed.table.bernoulli",
            "printed.table.euler",
            "printed.table.genocchi",
        ]

    def test_bernoulli_residual(self, disputed_report):
        check = disputed_report.get("printed.table.bernoulli")
        assert check.residual == -F(1, 4) + L / 4
        assert [f.n for f in check.failures] == [3]

    def test_euler_residuals(self, disputed_report):
        check = disputed_report.get("printed.table.euler")
        assert check.residual == L ** 2 / 4
        assert [f.residual for f in check.failures] == [
            L ** 2 / 4,
            -F(3, 2) * L ** 3,
            -F(5, 4) * L ** 2 + F(33, 4) * L ** 4,
            F(45, 4) * L ** 3 - F(195, 4) * L ** 5,
        ]

    def test_genocchi_residuals(self, disputed_report):
        check = disputed_report.get("printed.table.genocchi")
        assert check.residual == L ** 2
        assert [f.n for f in check.failures] == [4, 5, 6, 7]
        assert check.failures[1].residual == -F(15, 2) * L ** 3
        assert check.failures[3].residual == F(315, 4) * L ** 3 - F(1365, 4) * L ** 5

    def test_entries_above_n_max_are_not_compared(self):
        results = check_printed_tables(3, include_disputed=True)
        assert [r.passed for r in results] == [False, False, True]

    def test_undisputed_entries_match(self):
        assert all(r.passed for r in check_printed_tables(12))

    def test_disputed_matrix_entries(self):
        results = check_matrix_displays(3, include_disputed=True)
        bernoulli, euler, genocchi = results
        assert euler.residual == 4 * L * X ** 2 + L ** 2 / 2
        assert bernoulli.residual == (3 * L ** 2 - 3 * L) * X + F(5, 12) * L ** 3 + F(1, 3) * L ** 2 - F(3, 4) * L
        assert genocchi.passed
        assert euler.failures[0].label == "k=2,n=1"

    def test_matrix_displays_default(self):
        results = check_matrix_displays()
        assert all(r.passed for r in results)
        assert results[2].comparisons == 8


class TestIndividualChecks:
    def test_shift_identities(self):
        assert check_bernoulli_shift_identity(12).passed
        assert check_euler_shift_identity(12).passed
        assert check_genocchi_shift_identity(12).passed

    def test_bernoulli_shift_at_one(self):
        beta_1 = X - F(1, 2) + L / 2
        assert bernoulli_shift_rhs(beta_1, 1) == X + (1 - L) / 2

    def test_shift_identity_detects_wrong_family(self):
        euler = build_table(SequenceKind.EULER, 4)
        impostor = SequenceTable(
            kind=SequenceKind.BERNOULLI,
            n_max=4,
            numbers=euler.numbers,
            polynomials=euler.polynomials,
        )
        result = check_bernoulli_shift_identity(4, {SequenceKind.BERNOULLI: impostor})
        assert not result.passed
        assert result.status is CheckStatus.FAILED
        assert not result.residual.is_zero()

    def test_boundary_and_relations(self):
        results = check_boundary_and_relations(12)
        assert [r.check_id for r in results] == [
            "boundary.bernoulli",
            "boundary.euler",
            "boundary.genocchi",
            "relations.genocchi_from_bernoulli",
            "relations.genocchi_from_euler",
        ]
        assert all(r.passed for r in results)

    def test_classical_degeneration(self):
        results = check_classical_degeneration(12, config=SMALL_CONFIG)
        assert all(r.passed for r in results)
        assert results[-1].check_id == "classical.generating_law"

    def test_random_seeds_are_reproducible(self):
        config = SuiteConfig(random_seed=7, random_sequences=3)
        first = random_seeds(config)
        assert first == random_seeds(config)
        assert len(first) == 3
        assert all(len(seed) == 11 for _, seed in first)
        assert all(value.is_constant() or value.is_zero() for _, seed in first for value in seed)


class TestTranscription:
    def test_bundled_file(self):
        transcription = load_transcription()
        assert len(transcription.tables) == 3
        disputed = [e.n for e in transcription.table(SequenceKind.EULER).entries if e.disputed]
        assert disputed == [3, 4, 5, 6]
        first_bernoulli = transcription.table(SequenceKind.BERNOULLI).entries[1]
        assert first_bernoulli.to_poly() == -F(1, 2) + L / 2

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(TranscriptionError):
            load_transcription(path)

    def test_invalid_rational(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "tables": [{"kind": "euler", "entries": [{"n": 0, "poly": [[0, 0, "1/0"]]}]}],
            "matrices": [],
        }), encoding="utf-8")
        with pytest.raises(TranscriptionError):
            load_transcription(path)

    def test_matrix_entry_needs_row(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "tables": [],
            "matrices": [{"kind": "euler", "entries": [{"n": 0, "poly": []}]}],
        }), encoding="utf-8")
        with pytest.raises(TranscriptionError):
            load_transcription(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(TranscriptionError):
            load_transcription(tmp_path / "absent.json")


class TestReporter:
    def test_json(self, disputed_report):
        payload = json.loads(VerificationReporter.to_json(disputed_report))
        assert payload["all_pass"] is False
        bernoulli = next(c for c in payload["checks"] if c["check_id"] == "printed.table.bernoulli")
        assert bernoulli["status"] == "fail"
        assert bernoulli["residual"] == [
            {"x_deg": 0, "lambda_deg": 1, "num": "1", "den": "4"},
            {"x_deg": 0, "lambda_deg": 0, "num": "-1", "den": "4"},
        ]

    def test_markdown(self, full_report, disputed_report):
        assert "✅ PASSED" in VerificationReporter.to_markdown(full_report)
        text = VerificationReporter.to_markdown(disputed_report)
        assert "❌ FAILED" in text
        assert "### Failures" in text
        assert "`(1/4)λ - 1/4`" in text

    def test_csv(self, disputed_report):
        rows = list(csv.reader(io.StringIO(VerificationReporter.to_csv(disputed_report))))
        assert rows[0][0] == "check_id"
        failed = [row for row in rows[1:] if row[2] == "fail"]
        assert [row[0] for row in failed] == [
            "printed.table.bernoulli",
            "printed.table.euler",
            "printed.table.genocchi",
        ]

    def test_latex(self, full_report):
        text = VerificationReporter.to_latex(full_report)
        assert text.startswith("\\begin{tabular}")
        assert "routes.bernoulli" in text
        assert "relations.genocchi\\_from\\_euler" in text

    def test_summary_line(self, full_report, disputed_report):
        assert VerificationReporter.format_summary_line(full_report) == "all 28 checks passed (n <= 12)"
        assert VerificationReporter.format_summary_line(disputed_report).startswith("3 of 28 checks failed")

    def test_unknown_format(self, full_report):
        with pytest.raises(ValueError):
            VerificationReporter.render(full_report, "yaml")
