"""
JSON payloads for tables and matrices, and the seed-file reader.

Payloads are written from canonical polynomials with sorted term records, so
reading a payload back and writing it again gives the same bytes.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..algebra import TERM_LIST, BiPoly, TermRecord, format_rational, parse_rational, poly_from_term_records
from ..errors import DegSeidelError, InputError, SeedFileError
from ..seidel import SeidelMatrix, SeidelMode
from ..sequences import SequenceKind, SequenceRoute

logger = logging.getLogger(__name__)

CUSTOM_SEED = "custom"


@dataclass(frozen=True)
class TableView:
    """Numbers or polynomials of one family, ready for rendering"""
    kind: SequenceKind
    n_max: int
    polynomials: bool
    values: Tuple[BiPoly, ...]
    route: SequenceRoute = SequenceRoute.RECURRENCE
    lambda_value: Optional[Fraction] = None


@dataclass(frozen=True)
class MatrixView:
    """An Euler-Seidel matrix with the name of its seed"""
    seed: str
    matrix: SeidelMatrix
    lambda_value: Optional[Fraction] = None


# Pydantic models for reading payloads back

class TableEntryModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    poly: List[TermRecord]


class TablePayload(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    kind: SequenceKind
    n_max: int = Field(ge=0)
    quantity: str = Field(pattern="^(numbers|polynomials)$")
    route: SequenceRoute
    lambda_value: Optional[str] = Field(default=None, alias="lambda")
    entries: List[TableEntryModel]


class MatrixEntryModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=0)
    n: int = Field(ge=0)
    poly: List[TermRecord]


class MatrixPayload(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    kind: str
    n_max: int = Field(ge=0)
    mode: SeidelMode
    lambda_value: Optional[str] = Field(default=None, alias="lambda")
    entries: List[MatrixEntryModel]


def _lambda_text(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_rational(value)


def _lambda_value(text: Optional[str]) -> Optional[Fraction]:
    return None if text is None else parse_rational(text)


def _dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def table_to_json(view: TableView) -> str:
    payload = {
        "kind": view.kind.value,
        "n_max": view.n_max,
        "quantity": "polynomials" if view.polynomials else "numbers",
        "route": view.route.value,
        "lambda": _lambda_text(view.lambda_value),
        "entries": [{"n": n, "poly": value.to_records()} for n, value in enumerate(view.values)],
    }
    return _dumps(payload)


def matrix_to_json(view: MatrixView) -> str:
    payload = {
        "kind": view.seed,
        "n_max": view.matrix.size,
        "mode": view.matrix.mode.value,
        "lambda": _lambda_text(view.lambda_value),
        "entries": [
            {"k": k, "n": n, "poly": value.to_records()}
            for k, n, value in view.matrix.entries()
        ],
    }
    return _dumps(payload)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno}: {e.msg}")


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}"


def table_from_json(text: str) -> TableView:
    """
    Parse a table payload produced by table_to_json.

    Raises:
        InputError: If the text is not a valid table payload
    """
    try:
        payload = TablePayload.model_validate(_load_json(text))
    except ValidationError as e:
        raise InputError(f"invalid table payload: {_validation_message(e)}")
    indices = [entry.n for entry in payload.entries]
    if indices != list(range(payload.n_max + 1)):
        raise InputError(f"table entries must be n = 0..{payload.n_max} in order")
    return TableView(
        kind=payload.kind,
        n_max=payload.n_max,
        polynomials=payload.quantity == "polynomials",
        values=tuple(poly_from_term_records(entry.poly) for entry in payload.entries),
        route=payload.route,
        lambda_value=_lambda_value(payload.lambda_value),
    )


def matrix_from_json(text: str) -> MatrixView:
    """
    Parse a matrix payload produced by matrix_to_json.

    Raises:
        InputError: If the text is not a valid matrix payload
    """
    try:
        payload = MatrixPayload.model_validate(_load_json(text))
    except ValidationError as e:
        raise InputError(f"invalid matrix payload: {_validation_message(e)}")
    size = payload.n_max
    expected = [(k, n) for k in range(size + 1) for n in range(size - k + 1)]
    if [(entry.k, entry.n) for entry in payload.entries] != expected:
        raise InputError(f"matrix entries must list the triangle k + n <= {size} row by row")

    rows: List[List[BiPoly]] = [[] for _ in range(size + 1)]
    for entry in payload.entries:
        rows[entry.k].append(poly_from_term_records(entry.poly))
    matrix = SeidelMatrix(size=size, mode=payload.mode, rows=tuple(tuple(row) for row in rows))
    return MatrixView(seed=payload.kind, matrix=matrix, lambda_value=_lambda_value(payload.lambda_value))


# Seed files

def parse_seed_lines(text: str, path: Optional[str] = None) -> List[BiPoly]:
    """
    Parse a seed file: one JSON list of term records per line.

    Blank lines and lines starting with '#' are skipped.

    Args:
        text: File contents
        path: File name used in diagnostics

    Returns:
        Seed polynomials in file order

    Raises:
        SeedFileError: With the 1-based line (and term) of the first problem
        InputError: If the file holds no polynomial at all
    """
    return _parse_lines(text.splitlines(), path)


def _parse_lines(lines: Iterable[str], path: Optional[str]) -> List[BiPoly]:
    seed = []
    for line_no, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise SeedFileError(f"invalid JSON: {e.msg}", line_no, path=path)
        if not isinstance(data, list):
            raise SeedFileError("expected a JSON list of term records", line_no, path=path)

        try:
            records = TERM_LIST.validate_python(data)
        except ValidationError as e:
            first = e.errors()[0]
            term_no, *field = first["loc"]
            location = ".".join(str(part) for part in field)
            message = f"{location}: {first['msg']}" if location else first["msg"]
            raise SeedFileError(message, line_no, int(term_no) + 1, path)
        try:
            seed.append(poly_from_term_records(records))
        except DegSeidelError as e:
            raise SeedFileError(str(e), line_no, path=path)

    if not seed:
        raise InputError(f"{path or 'seed file'}: no polynomials found")
    logger.debug(f"read {len(seed)} seed polynomials from {path or 'text'}")
    return seed


def _decode_lines(raw: bytes, path: str) -> Iterator[str]:
    for line_no, line in enumerate(raw.splitlines(), start=1):
        try:
            yield line.decode("utf-8-sig" if line_no == 1 else "utf-8")
        except UnicodeDecodeError as e:
            raise SeedFileError(f"not valid UTF-8 (byte {e.start + 1})", line_no, path=path)


def read_seed_file(path: Path) -> List[BiPoly]:
    """
    Read and parse a seed file from disk.

    Raises:
        InputError: If the file cannot be opened
        SeedFileError: If a line is not UTF-8 or does not parse
    """
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read seed file {path}: {e}")
    return _parse_lines(_decode_lines(raw, str(path)), str(path))
