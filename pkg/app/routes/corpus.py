import argparse
import os

from app.core.errors import EXIT_FAILED, EXIT_INPUT, EXIT_OK, InputError
from app.core.logger import get_logger
from app.db.corpus_store import CorpusStore
from app.routes.common import add_run_arguments, exit_code, load, table
from app.routes.suite import render
from app.services.theorem_service import run_suite

logger = get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("corpus", help="run the suite over every .alg file in a directory")
    parser.add_argument("directory", nargs="?", help="defaults to the bundled corpus (CORPUS_DIR)")
    add_run_arguments(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    """Algebras run one after another in file-name order; with --json only records reach stdout."""
    store = CorpusStore(args.directory)
    codes = []
    overview = []
    for path in store.list_files():
        try:
            algebra, caps = load(args, path=path)
        except InputError as exc:
            logger.error(f"❌ {os.path.basename(path)}: {exc}")
            codes.append(EXIT_INPUT)
            continue
        report = run_suite(algebra, caps)
        code = exit_code(report.statuses)
        codes.append(code)
        if args.json:
            for record in report.records():
                print(record)
        else:
            print(render(report))
            print()
        counts = {s: sum(1 for c in report.checks if c.status.value == s) for s in ("pass", "vacuous", "fail", "inconclusive")}
        overview.append([algebra.name, counts["pass"], counts["vacuous"], counts["fail"], counts["inconclusive"], f"{report.seconds:.2f}s"])
    if not args.json:
        print(table(["algebra", "pass", "vacuous", "fail", "inconclusive", "time"], overview))
    for code in (EXIT_FAILED, EXIT_INPUT):
        if code in codes:
            return code
    return max(codes, default=EXIT_OK)
