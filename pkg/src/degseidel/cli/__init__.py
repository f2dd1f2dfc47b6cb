"""
Command-line interface for degseidel.
"""

from .main import main, run, build_parser
from .render import OUTPUT_FORMATS, render_table, render_matrix
from .schema import (
    TableView,
    MatrixView,
    table_to_json,
    matrix_to_json,
    table_from_json,
    matrix_from_json,
    parse_seed_lines,
    read_seed_file,
)

__all__ = [
    "main",
    "run",
    "build_parser",
    "OUTPUT_FORMATS",
    "render_table",
    "render_matrix",
    "TableView",
    "MatrixView",
    "table_to_json",
    "matrix_to_json",
    "table_from_json",
    "matrix_from_json",
    "parse_seed_lines",
    "read_seed_file",
]
