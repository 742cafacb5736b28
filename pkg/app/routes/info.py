import argparse
import json

from app.core.errors import EXIT_OK
from app.routes.common import add_algebra_argument, load
from app.services.theorem_service import TheoremSession, summarize


def register(subparsers) -> None:
    parser = subparsers.add_parser("info", help="dimension, gl.dim, domdim and Gorenstein data")
    add_algebra_argument(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    algebra, caps = load(args)
    summary = summarize(TheoremSession(algebra, caps))
    for key, value in summary.model_dump(mode="json").items():
        print(f"{key:>14}: {value}")
    if args.json:
        print(json.dumps({"kind": "algebra", "summary": summary.model_dump(mode="json")}, sort_keys=True))
    return EXIT_OK
