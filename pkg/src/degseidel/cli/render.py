"""
Text rendering of tables and matrices.

Formats: json (see schema), markdown, latex, csv. Every coefficient is printed
as an exact rational.
"""

import csv
import io
from typing import Callable, Dict, List

from ..algebra import format_latex, format_plain, format_rational
from .schema import MatrixView, TableView, matrix_to_json, table_to_json

OUTPUT_FORMATS = ("json", "latex", "markdown", "csv")


def _table_symbol(view: TableView) -> str:
    symbol = f"{view.kind.symbol}_{{n,λ}}"
    return f"{symbol}(x)" if view.polynomials else symbol


def _lambda_caption(view_lambda) -> str:
    return "" if view_lambda is None else f"λ = {format_rational(view_lambda)}"


def table_to_markdown(view: TableView) -> str:
    lines = []
    caption = _lambda_caption(view.lambda_value)
    if caption:
        lines.extend([f"*{caption}*", ""])
    lines.append(f"| n | {_table_symbol(view)} |")
    lines.append("|---|---|")
    for n, value in enumerate(view.values):
        lines.append(f"| {n} | `{format_plain(value)}` |")
    return "\n".join(lines) + "\n"


def table_to_latex(view: TableView) -> str:
    argument = "(x)" if view.polynomials else ""
    lines = ["\\begin{align*}"]
    for n, value in enumerate(view.values):
        end = " \\\\" if n < len(view.values) - 1 else ""
        lines.append(f"{view.kind.latex_symbol}_{{{n},\\lambda}}{argument} &= {format_latex(value)}{end}")
    lines.append("\\end{align*}")
    if view.lambda_value is not None:
        lines.insert(0, f"% \\lambda = {format_rational(view.lambda_value)}")
    return "\n".join(lines) + "\n"


def table_to_csv(view: TableView) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "value"])
    for n, value in enumerate(view.values):
        writer.writerow([n, format_plain(value)])
    return buffer.getvalue()


def matrix_to_markdown(view: MatrixView) -> str:
    matrix = view.matrix
    lines = []
    caption = _lambda_caption(view.lambda_value)
    if caption:
        lines.extend([f"*{caption}*", ""])
    header = ["k \\ n"] + [str(n) for n in range(matrix.size + 1)]
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "---|" * len(header))
    for k, row in enumerate(matrix.rows):
        cells = [f"`{format_plain(value)}`" for value in row]
        cells.extend([""] * (matrix.size + 1 - len(row)))
        lines.append("| " + " | ".join([str(k)] + cells) + " |")
    return "\n".join(lines) + "\n"


def matrix_to_latex(view: MatrixView) -> str:
    matrix = view.matrix
    lines = ["\\begin{pmatrix}"]
    for k, row in enumerate(matrix.rows):
        cells: List[str] = [format_latex(value) for value in row]
        cells.extend([""] * (matrix.size + 1 - len(row)))
        end = " \\\\" if k < matrix.size else ""
        lines.append(" & ".join(cells) + end)
    lines.append("\\end{pmatrix}")
    if view.lambda_value is not None:
        lines.insert(0, f"% \\lambda = {format_rational(view.lambda_value)}")
    return "\n".join(lines) + "\n"


def matrix_to_csv(view: MatrixView) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "n", "value"])
    for k, n, value in view.matrix.entries():
        writer.writerow([k, n, format_plain(value)])
    return buffer.getvalue()


TABLE_RENDERERS: Dict[str, Callable[[TableView], str]] = {
    "json": table_to_json,
    "markdown": table_to_markdown,
    "latex": table_to_latex,
    "csv": table_to_csv,
}

MATRIX_RENDERERS: Dict[str, Callable[[MatrixView], str]] = {
    "json": matrix_to_json,
    "markdown": matrix_to_markdown,
    "latex": matrix_to_latex,
    "csv": matrix_to_csv,
}


def render_table(view: TableView, output_format: str = "json") -> str:
    return TABLE_RENDERERS[output_format](view)


def render_matrix(view: MatrixView, output_format: str = "json") -> str:
    return MATRIX_RENDERERS[output_format](view)
