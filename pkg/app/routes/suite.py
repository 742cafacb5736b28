import argparse

from app.models.schemas import CheckStatus, SuiteReport
from app.routes.common import add_algebra_argument, exit_code, load, table
from app.services.theorem_service import run_suite


def register(subparsers) -> None:
    parser = subparsers.add_parser("suite", help="run every check on one algebra")
    add_algebra_argument(parser)
    parser.set_defaults(func=handle)


def render(report: SuiteReport) -> str:
    """Human report: the verdict, then one row per check."""
    v = report.verdict
    lines = [
        f"== {report.summary.name}  (dim {report.summary.dimension}, gl.dim {report.summary.gldim}, domdim {report.summary.domdim})",
        f"1-AG {v.is_1ag}  Auslander {v.is_auslander}  tilted {v.is_tilted}  main theorem consistent {v.main_theorem_consistent}  [{v.status.value}]",
    ]
    lines += [f"  {line}" for line in v.detail if v.status != CheckStatus.PASS]
    rows = [[c.name, c.status.value, c.evidence[0] if c.evidence else ""] for c in report.checks]
    lines.append(table(["check", "status", "evidence"], rows))
    lines.append(f"({report.seconds:.2f}s)")
    return "\n".join(lines)


def handle(args: argparse.Namespace) -> int:
    algebra, caps = load(args)
    report = run_suite(algebra, caps)
    print(render(report))
    if args.json:
        for record in report.records():
            print(record)
    return exit_code(report.statuses)
