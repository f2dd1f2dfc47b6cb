"""
Error handling and formatting for degseidel.
"""

from .exceptions import (
    DegSeidelError,
    AlgebraError,
    ZeroDenominatorError,
    OrderMismatchError,
    NotInvertibleError,
    NonZeroConstantTermError,
    SequenceTooShortError,
    InputError,
    RationalParseError,
    SeedFileError,
    TranscriptionError,
)
from .formatter import ErrorFormatter, format_error_for_user
from .categories import ErrorCategory, categorize_error

__all__ = [
    # Exceptions
    "DegSeidelError",
    "AlgebraError",
    "ZeroDenominatorError",
    "OrderMismatchError",
    "NotInvertibleError",
    "NonZeroConstantTermError",
    "SequenceTooShortError",
    "InputError",
    "RationalParseError",
    "SeedFileError",
    "TranscriptionError",
    # Formatting
    "ErrorFormatter",
    "format_error_for_user",
    "ErrorCategory",
    "categorize_error",
]
