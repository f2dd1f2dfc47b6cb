"""
Exception hierarchy for degseidel.

Every error raised on purpose by the package derives from DegSeidelError so the
command-line front end can turn it into a diagnostic and exit code 2.
"""

from typing import Optional


class DegSeidelError(Exception):
    """Base exception for degseidel errors"""
    pass


class AlgebraError(DegSeidelError):
    """Invalid exact-arithmetic operation"""
    pass


class ZeroDenominatorError(AlgebraError):
    """Rational constructed with a zero denominator"""
    pass


class OrderMismatchError(AlgebraError):
    """Two truncated series with different orders were combined"""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"series order mismatch: {left} != {right}")


class NotInvertibleError(AlgebraError):
    """Series whose constant coefficient is not a nonzero constant"""
    pass


class NonZeroConstantTermError(AlgebraError):
    """Division by t requested for a series with a nonzero constant term"""
    pass


class SequenceTooShortError(DegSeidelError):
    """A seed sequence has fewer terms than the requested size needs"""

    def __init__(self, required: int, actual: int):
        self.required = required
        self.actual = actual
        super().__init__(f"sequence too short: need {required} terms, got {actual}")


class InputError(DegSeidelError):
    """Malformed user-supplied input"""
    pass


class RationalParseError(InputError):
    """Text that is not of the form p or p/q"""
    pass


class SeedFileError(InputError):
    """Malformed seed file, located by line and (optionally) term"""

    def __init__(self, message: str, line: int, term: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.term = term
        self.path = path
        location = f"line {line}" if term is None else f"line {line}, term {term}"
        prefix = f"{path}: " if path else ""
        super().__init__(f"{prefix}{location}: {message}")


class TranscriptionError(InputError):
    """The printed-value transcription file failed validation"""
    pass
