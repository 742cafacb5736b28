"""Arguments and helpers shared by every subcommand."""
import argparse
import os
from typing import List, Optional, Sequence, Tuple

from app.core.config import RunCaps
from app.core.errors import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, InputError
from app.db.corpus_store import CorpusStore
from app.models.algebra import AlgebraPresentation
from app.models.schemas import CheckStatus
from app.services.linalg_service import MAX_PRIME, is_prime
from app.services.parser_service import parse_algebra_file


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not an integer")
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} must be at least 1")
    return n


def _prime(value: str) -> int:
    n = _positive(value)
    if not is_prime(n) or n >= MAX_PRIME:
        raise argparse.ArgumentTypeError(f"{n} is not a supported prime")
    return n


def add_run_arguments(parser: argparse.ArgumentParser) -> None:
    """Overrides and output flags understood by every subcommand."""
    parser.add_argument("--prime", type=_prime, help="ground field F_p (overrides the file)")
    parser.add_argument("--nilpotency-cap", type=_positive, help="longest nonzero path allowed")
    parser.add_argument("--resolution-cap", type=_positive, help="steps before pd/id report exceeded")
    parser.add_argument("--catalog-cap", type=_positive, help="indecomposables before giving up")
    parser.add_argument("--seed", type=int, help="seed for every randomised search")
    parser.add_argument("--json", action="store_true", help="also print machine-readable records")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")


def add_algebra_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("algebra", help="path to an .alg file, or the name of a bundled corpus algebra")
    add_run_arguments(parser)


def resolve_path(reference: str) -> str:
    """A file path as given, else a bundled corpus algebra of that name."""
    if os.path.exists(reference):
        return reference
    try:
        bundled = CorpusStore().get_path(reference)
    except InputError:
        bundled = None
    return bundled or reference


def load(args: argparse.Namespace, path: Optional[str] = None) -> Tuple[AlgebraPresentation, RunCaps]:
    text = CorpusStore.read(path or resolve_path(args.algebra))
    return parse_algebra_file(
        text,
        prime=args.prime,
        nilpotency=args.nilpotency_cap,
        resolution=args.resolution_cap,
        catalog=args.catalog_cap,
        seed=args.seed,
    )


def exit_code(statuses: Sequence[CheckStatus]) -> int:
    if CheckStatus.FAIL in statuses:
        return EXIT_FAILED
    if CheckStatus.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def table(headers: List[str], rows: List[List[object]]) -> str:
    """Left-aligned plain-text table."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
