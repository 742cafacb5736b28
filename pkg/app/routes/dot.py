import argparse

from app.core.errors import EXIT_OK, InputError
from app.core.logger import get_logger
from app.routes.common import add_algebra_argument, load
from app.services.ar_service import ar_quiver_dot, enumerate_indecomposables

logger = get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("dot", help="Auslander-Reiten quiver in DOT syntax")
    add_algebra_argument(parser)
    parser.add_argument("-o", "--output", help="write to this path instead of stdout")
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    algebra, caps = load(args)
    text = ar_quiver_dot(enumerate_indecomposables(algebra, caps))
    if not args.output:
        print(text, end="")
        return EXIT_OK
    try:
        with open(args.output, "w") as f:
            f.write(text)
    except OSError as exc:
        raise InputError(f"cannot write '{args.output}': {exc}") from exc
    logger.info(f"✅ Wrote {args.output}")
    return EXIT_OK
