"""
Error message formatting for standard-error diagnostics.
"""

import logging
from .categories import ErrorCategory, categorize_error

logger = logging.getLogger(__name__)


class ErrorFormatter:
    """
    Formats errors into diagnostics for the command line.
    """

    # Suggestions for each error category
    SUGGESTIONS = {
        ErrorCategory.ALGEBRA: [
            "Check that series orders agree before combining them",
            "A reciprocal needs a nonzero constant leading coefficient",
        ],
        ErrorCategory.INPUT: [
            "Rationals are written as p or p/q with q nonzero",
            "Seed files hold one JSON list of term records per line",
            "Each term record needs x_deg, lambda_deg and num; den defaults to 1",
        ],
        ErrorCategory.CONFIGURATION: [
            "Printed terms are [x_deg, lambda_deg, \"p/q\"] triples",
            "Verify the printed-value transcription file is intact",
        ],
        ErrorCategory.INTERNAL: [
            "Re-run with LOG_LEVEL=DEBUG for more detail",
            "Report this issue if it persists",
        ],
    }

    @staticmethod
    def format_error_detailed(error: Exception) -> str:
        """
        Format an error with category, explanation and suggestions.

        Args:
            error: The exception to format

        Returns:
            Multi-line diagnostic
        """
        category, explanation = categorize_error(error)
        suggestions = ErrorFormatter.SUGGESTIONS.get(category, [])

        lines = [
            f"error ({category.value}): {explanation}",
            f"  {error}",
        ]
        for suggestion in suggestions:
            lines.append(f"  hint: {suggestion}")

        return "\n".join(lines)

    @staticmethod
    def format_error_concise(error: Exception) -> str:
        """
        Format an error concisely for logs or inline display.

        Args:
            error: The exception to format

        Returns:
            Concise error string
        """
        category, explanation = categorize_error(error)
        return f"{category.value.upper()}: {explanation} - {str(error)[:200]}"


def format_error_for_user(error: Exception, format_type: str = "concise") -> str:
    """
    Convenience function to format an error for display to users.

    Args:
        error: The exception to format
        format_type: Format type ("detailed" or "concise")

    Returns:
        Formatted error message
    """
    if format_type == "detailed":
        return ErrorFormatter.format_error_detailed(error)
    return ErrorFormatter.format_error_concise(error)
