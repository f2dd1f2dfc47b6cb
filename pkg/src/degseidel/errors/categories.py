"""
Error categorization for command-line diagnostics.
"""

from enum import Enum
from typing import Tuple

from .exceptions import (
    AlgebraError,
    InputError,
    SeedFileError,
    SequenceTooShortError,
    TranscriptionError,
)


class ErrorCategory(Enum):
    """Categories of errors that can occur in degseidel"""
    ALGEBRA = "algebra"
    INPUT = "input"
    CONFIGURATION = "configuration"
    INTERNAL = "internal"


def categorize_error(error: Exception) -> Tuple[ErrorCategory, str]:
    """
    Categorize an error and provide a short explanation.

    Args:
        error: The exception to categorize

    Returns:
        Tuple of (ErrorCategory, explanation)
    """
    if isinstance(error, SeedFileError):
        return (
            ErrorCategory.INPUT,
            "Malformed seed file"
        )

    if isinstance(error, TranscriptionError):
        return (
            ErrorCategory.CONFIGURATION,
            "Printed-value transcription data is invalid"
        )

    if isinstance(error, InputError):
        return (
            ErrorCategory.INPUT,
            "Invalid input value"
        )

    if isinstance(error, SequenceTooShortError):
        return (
            ErrorCategory.INPUT,
            "Seed sequence is shorter than the requested matrix size"
        )

    if isinstance(error, (AlgebraError, ZeroDivisionError)):
        return (
            ErrorCategory.ALGEBRA,
            "Exact arithmetic error"
        )

    # Default to internal error
    return (
        ErrorCategory.INTERNAL,
        "An unexpected error occurred"
    )
