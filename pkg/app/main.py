import argparse
import sys
from typing import List, Optional

from app.core.errors import AlgebraToolkitError, InputError
from app.core.logger import configure_logging, get_logger
from app.routes import check, corpus, dot, ind, info, suite

logger = get_logger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors become input errors (exit 3) instead of argparse's exit 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="run.py",
        description="Homological invariants of bound quiver algebras over F_p and the 1-AG / tilted checks.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="<command>")
    subparsers.required = True
    for route in (info, ind, dot, check, suite, corpus):
        route.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except AlgebraToolkitError as exc:
        logger.error(f"❌ {type(exc).__name__}: {exc}")
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
