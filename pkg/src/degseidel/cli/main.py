"""
Command-line front end.

    table    degenerate numbers or polynomials of one family
    limit    the same table at λ = 0
    matrix   degenerate Euler-Seidel matrix of a family or a seed file
    verify   run the identity suite

Payloads go to standard output; diagnostics and logs go to standard error.
Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional

from dotenv import find_dotenv, load_dotenv

from ..algebra import parse_rational, poly_eval_lambda
from ..config import SuiteConfig
from ..errors import DegSeidelError, SeedFileError, format_error_for_user
from ..logging_config import configure_logging
from ..seidel import SeidelMode, build
from ..sequences import SequenceKind, SequenceRoute, build_table
from ..verification import VerificationReporter, run_all
from .render import OUTPUT_FORMATS, render_matrix, render_table
from .schema import CUSTOM_SEED, MatrixView, TableView, read_seed_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

KINDS = [kind.value for kind in SequenceKind]
ROUTES = [route.value for route in SequenceRoute]


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DegSeidelError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser(config: SuiteConfig) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseidel",
        description="Exact degenerate Bernoulli, Euler and Genocchi tables, Euler-Seidel matrices and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=OUTPUT_FORMATS, default=config.default_format,
                       help=f"Output format (default: {config.default_format})")

    table = sub.add_parser("table", help="Degenerate numbers or polynomials of one family")
    table.add_argument("kind", choices=KINDS)
    table.add_argument("--n", type=_nonnegative_int, default=5, help="Highest index (default: 5)")
    table.add_argument("--polynomials", action="store_true", help="Print polynomials instead of numbers")
    table.add_argument("--lambda", dest="lambda_value", type=_rational, default=None, metavar="P/Q",
                       help="Evaluate λ at this rational")
    table.add_argument("--route", choices=ROUTES, default=SequenceRoute.RECURRENCE.value,
                       help="Computation route (default: recurrence)")
    add_format(table)

    limit = sub.add_parser("limit", help="Classical limit: table with λ = 0")
    limit.add_argument("kind", choices=KINDS)
    limit.add_argument("--n", type=_nonnegative_int, default=5, help="Highest index (default: 5)")
    limit.add_argument("--polynomials", action="store_true", help="Print polynomials instead of numbers")
    add_format(limit)

    matrix = sub.add_parser("matrix", help="Degenerate Euler-Seidel matrix")
    matrix.add_argument("kind", nargs="?", choices=KINDS, help="Polynomial family used as the seed row")
    matrix.add_argument("--seed-file", dest="seed_file", default=None, metavar="PATH",
                        help="Seed row from a file: one JSON list of term records per line")
    matrix.add_argument("--N", dest="size", type=_nonnegative_int, default=None,
                        help="Largest k + n (default: 3, or the seed file length minus one)")
    group = matrix.add_mutually_exclusive_group()
    group.add_argument("--lambda", dest="lambda_value", type=_rational, default=None, metavar="P/Q",
                       help="Evaluate λ at this rational after the fill")
    group.add_argument("--classical", action="store_true", help="Classical matrix (λ = 0)")
    add_format(matrix)

    verify = sub.add_parser("verify", help="Run the identity suite")
    verify.add_argument("--n", type=_nonnegative_int, default=12, help="Highest index (default: 12)")
    verify.add_argument("--include-paper-tables", dest="include_paper_tables", action="store_true",
                        help="Also compare printed table entries known to be wrong")
    verify.add_argument("--include-paper-matrices", dest="include_paper_matrices", action="store_true",
                        help="Also compare printed matrix entries known to be wrong")
    add_format(verify)

    return parser


def cmd_table(args: argparse.Namespace, lambda_value: Optional[Fraction] = None) -> int:
    kind = SequenceKind(args.kind)
    route = SequenceRoute(getattr(args, "route", SequenceRoute.RECURRENCE.value))
    table = build_table(kind, args.n, route)
    values = table.polynomials if args.polynomials else table.numbers
    if lambda_value is not None:
        values = tuple(poly_eval_lambda(p, lambda_value) for p in values)
    view = TableView(
        kind=kind,
        n_max=args.n,
        polynomials=args.polynomials,
        values=tuple(values),
        route=route,
        lambda_value=lambda_value,
    )
    sys.stdout.write(render_table(view, args.format))
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if (args.kind is None) == (args.seed_file is None):
        parser.error("matrix needs exactly one of a family name or --seed-file")

    if args.seed_file is not None:
        seed = read_seed_file(args.seed_file)
        size = len(seed) - 1 if args.size is None else args.size
        name = CUSTOM_SEED
    else:
        size = 3 if args.size is None else args.size
        seed = build_table(SequenceKind(args.kind), size).polynomials
        name = args.kind

    mode = SeidelMode.CLASSICAL if args.classical else SeidelMode.DEGENERATE
    matrix = build(seed, size, mode)
    if args.lambda_value is not None:
        matrix = matrix.evaluate_lambda(args.lambda_value)
    logger.info(f"built {mode.value} matrix of size {size} from {name} seed")
    sys.stdout.write(render_matrix(MatrixView(seed=name, matrix=matrix, lambda_value=args.lambda_value), args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: SuiteConfig) -> int:
    report = run_all(
        args.n,
        include_disputed_tables=args.include_paper_tables,
        include_disputed_matrices=args.include_paper_matrices,
        config=config,
    )
    sys.stdout.write(VerificationReporter.render(report, args.format))
    sys.stderr.write(VerificationReporter.format_summary_line(report) + "\n")
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    config = SuiteConfig.from_env()
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
        if args.command == "table":
            return cmd_table(args, args.lambda_value)
        if args.command == "limit":
            return cmd_table(args, Fraction(0))
        if args.command == "matrix":
            return cmd_matrix(args, parser)
        return cmd_verify(args, config)
    except SystemExit as e:
        # argparse reports usage errors with exit status 2 and --help with 0
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except DegSeidelError as e:
        logger.debug("command failed", exc_info=True)
        style = "detailed" if isinstance(e, SeedFileError) else "concise"
        sys.stderr.write(format_error_for_user(e, style) + "\n")
        return EXIT_USAGE


def run(argv: Optional[List[str]] = None) -> int:
    """
    Process entry point: load .env from the working directory, attach the
    standard-error log handler, then run the command line.
    """
    load_dotenv(find_dotenv(usecwd=True))
    configure_logging()
    return main(argv)
