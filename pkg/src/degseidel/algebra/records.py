"""
Schema for serialized polynomials.

Every polynomial that enters the program from outside (seed files, JSON read
back for round-trips, the printed-value transcription) is validated against
these models before it becomes a BiPoly.
"""

import re
from typing import List

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator

from .bipoly import BiPoly

_INTEGER = re.compile(r"^[+-]?\d+$")


class TermRecord(BaseModel):
    """One term c·x^x_deg·λ^lambda_deg with c = num/den as decimal strings"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    x_deg: int = Field(ge=0)
    lambda_deg: int = Field(ge=0)
    num: str
    den: str = "1"

    @field_validator("num", "den", mode="before")
    @classmethod
    def _integer_string(cls, value):
        if isinstance(value, bool):
            raise ValueError("must be a decimal integer string")
        if isinstance(value, int):
            value = str(value)
        if not isinstance(value, str) or not _INTEGER.match(value.strip()):
            raise ValueError("must be a decimal integer string")
        return value.strip()

    @field_validator("den")
    @classmethod
    def _nonzero(cls, value: str) -> str:
        if int(value) == 0:
            raise ValueError("denominator must be nonzero")
        return value


TERM_LIST = TypeAdapter(List[TermRecord])


def poly_from_term_records(records: List[TermRecord]) -> BiPoly:
    """Convert validated term records into a canonical BiPoly."""
    return BiPoly.from_records(record.model_dump() for record in records)
