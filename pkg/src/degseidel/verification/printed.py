"""
Transcribed printed values.

The published number tables and matrix displays are kept as data, apart from
anything the engine computes. Entries known to disagree with the recurrences
carry ``disputed: true`` and are compared only on request.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..algebra import BiPoly, parse_rational
from ..errors import DegSeidelError, TranscriptionError
from ..sequences import SequenceKind

logger = logging.getLogger(__name__)

DEFAULT_TRANSCRIPTION = Path(__file__).parent / "data" / "printed_values.json"

# [x_deg, lambda_deg, "p/q"]
PrintedTerm = Tuple[int, int, str]


class PrintedEntry(BaseModel):
    """One printed polynomial, located by n (and k for matrices)"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    poly: List[PrintedTerm]
    disputed: bool = False
    note: str = ""

    @field_validator("poly")
    @classmethod
    def _exact_terms(cls, terms: List[PrintedTerm]) -> List[PrintedTerm]:
        for x_deg, lambda_deg, coefficient in terms:
            if x_deg < 0 or lambda_deg < 0:
                raise ValueError("exponents must be nonnegative")
            try:
                parse_rational(coefficient)
            except DegSeidelError as e:
                raise ValueError(str(e))
        return terms

    def to_poly(self) -> BiPoly:
        total = {}
        for x_deg, lambda_deg, coefficient in self.poly:
            key = (x_deg, lambda_deg)
            total[key] = total.get(key, 0) + parse_rational(coefficient)
        return BiPoly(total)

    @property
    def index(self) -> int:
        """k + n, the smallest table size that contains this entry"""
        return self.n + (self.k or 0)

    @property
    def label(self) -> str:
        if self.k is None:
            return f"n={self.n}"
        return f"k={self.k},n={self.n}"


class PrintedTable(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: SequenceKind
    entries: List[PrintedEntry]


class PrintedMatrix(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: SequenceKind
    entries: List[PrintedEntry]

    @field_validator("entries")
    @classmethod
    def _located(cls, entries: List[PrintedEntry]) -> List[PrintedEntry]:
        for entry in entries:
            if entry.k is None:
                raise ValueError(f"matrix entry n={entry.n} has no row index k")
        return entries


class Transcription(BaseModel):
    """All printed tables and matrix displays"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    tables: List[PrintedTable]
    matrices: List[PrintedMatrix]

    def table(self, kind: SequenceKind) -> PrintedTable:
        for table in self.tables:
            if table.kind is kind:
                return table
        return PrintedTable(kind=kind, entries=[])

    def matrix(self, kind: SequenceKind) -> PrintedMatrix:
        for matrix in self.matrices:
            if matrix.kind is kind:
                return matrix
        return PrintedMatrix(kind=kind, entries=[])


def load_transcription(path: Optional[Path] = None) -> Transcription:
    """
    Read and validate a transcription file.

    Args:
        path: JSON file; defaults to the bundled printed_values.json

    Returns:
        Validated Transcription

    Raises:
        TranscriptionError: If the file is missing, not JSON, or fails validation
    """
    if path is None:
        return _bundled_transcription()
    return _read_transcription(Path(path))


@lru_cache(maxsize=1)
def _bundled_transcription() -> Transcription:
    return _read_transcription(DEFAULT_TRANSCRIPTION)


def _read_transcription(path: Path) -> Transcription:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise TranscriptionError(f"cannot read transcription {path}: {e}")
    except json.JSONDecodeError as e:
        raise TranscriptionError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}")
    try:
        transcription = Transcription.model_validate(raw)
    except ValidationError as e:
        raise TranscriptionError(f"{path}: {e.error_count()} validation error(s): {e.errors()[0]['msg']}")
    logger.debug(
        f"loaded transcription {path.name}: {len(transcription.tables)} tables, "
        f"{len(transcription.matrices)} matrices"
    )
    return transcription
