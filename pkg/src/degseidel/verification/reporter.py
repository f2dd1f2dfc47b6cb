"""
Verification report rendering.

Formats a VerificationReport as JSON, Markdown, LaTeX or CSV. Output is
byte-deterministic: no timestamps, canonical term order, exact rationals.
"""

import csv
import io
import json
from typing import Any, Dict

from ..algebra import format_latex, format_plain
from .result_types import CheckResult, CheckStatus, VerificationReport


class VerificationReporter:
    """
    Formats verification reports for the command line.
    """

    @staticmethod
    def generate_status_badge(report: VerificationReport) -> str:
        """
        Generate a status badge for the whole run.

        Args:
            report: Verification report

        Returns:
            Badge text (emoji + status)
        """
        if report.all_pass:
            return "✅ PASSED"
        return "❌ FAILED"

    @staticmethod
    def format_summary_line(report: VerificationReport) -> str:
        """One line for standard error after a run."""
        failed = len(report.failed_checks)
        total = len(report.checks)
        if failed == 0:
            return f"all {total} checks passed (n <= {report.n_max})"
        return f"{failed} of {total} checks failed (n <= {report.n_max}): {report.get_failure_summary()}"

    @staticmethod
    def check_to_dict(check: CheckResult) -> Dict[str, Any]:
        return {
            "check_id": check.check_id,
            "group": check.group.value,
            "status": check.status.value,
            "n_range": list(check.n_range),
            "anchor": check.anchor,
            "comparisons": check.comparisons,
            "residual": check.residual.to_records() if check.residual is not None else None,
            "failures": [
                {"n": failure.n, "label": failure.label, "residual": failure.residual.to_records()}
                for failure in check.failures
            ],
        }

    @staticmethod
    def to_json(report: VerificationReport) -> str:
        payload = {
            "n_max": report.n_max,
            "all_pass": report.all_pass,
            "checks": [VerificationReporter.check_to_dict(check) for check in report.checks],
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def to_markdown(report: VerificationReport) -> str:
        """
        Markdown summary table followed by the failing residuals.

        Args:
            report: Verification report

        Returns:
            Markdown text
        """
        badge = VerificationReporter.generate_status_badge(report)
        text = f"## {badge} Identity verification (n ≤ {report.n_max})\n\n"
        text += "| check | group | status | comparisons | residual |\n"
        text += "|---|---|---|---|---|\n"
        for check in report.checks:
            residual = f"`{format_plain(check.residual)}`" if check.residual is not None else ""
            text += (
                f"| {check.check_id} | {check.group.value} | {check.status.value} "
                f"| {check.comparisons} | {residual} |\n"
            )

        failed = report.failed_checks
        if failed:
            text += "\n### Failures\n\n"
            for check in failed:
                text += f"**{check.check_id}** ({check.anchor})\n\n"
                for failure in check.failures[:10]:  # Limit to 10
                    text += f"- {failure.label}: `{format_plain(failure.residual)}`\n"
                if len(check.failures) > 10:
                    text += f"- *... and {len(check.failures) - 10} more*\n"
                text += "\n"
        return text

    @staticmethod
    def to_latex(report: VerificationReport) -> str:
        lines = [
            "\\begin{tabular}{llll}",
            "check & group & status & residual \\\\",
            "\\hline",
        ]
        for check in report.checks:
            residual = f"${format_latex(check.residual)}$" if check.residual is not None else ""
            check_id = check.check_id.replace("_", "\\_")
            lines.append(f"{check_id} & {check.group.value} & {check.status.value} & {residual} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_csv(report: VerificationReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["check_id", "group", "status", "n_min", "n_max", "comparisons", "failures", "residual"])
        for check in report.checks:
            writer.writerow([
                check.check_id,
                check.group.value,
                check.status.value,
                check.n_range[0],
                check.n_range[1],
                check.comparisons,
                len(check.failures),
                format_plain(check.residual) if check.status is CheckStatus.FAILED else "",
            ])
        return buffer.getvalue()

    @staticmethod
    def render(report: VerificationReport, output_format: str = "json") -> str:
        renderers = {
            "json": VerificationReporter.to_json,
            "markdown": VerificationReporter.to_markdown,
            "latex": VerificationReporter.to_latex,
            "csv": VerificationReporter.to_csv,
        }
        if output_format not in renderers:
            raise ValueError(f"unknown output format: {output_format}")
        return renderers[output_format](report)
