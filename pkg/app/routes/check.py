import argparse

from app.routes.common import add_algebra_argument, exit_code, load
from app.services.theorem_service import TheoremSession, run_check, theorem_verdict

# verb -> suite check backing it
VERBS = {"1ag": "one_ag", "auslander": "auslander", "tilted": "tilted_dichotomy", "main": "main_theorem"}


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="one verdict: 1ag, auslander, tilted or main")
    parser.add_argument("verb", choices=sorted(VERBS))
    add_algebra_argument(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    algebra, caps = load(args)
    session = TheoremSession(algebra, caps)
    result = run_check(session, VERBS[args.verb])
    statuses = [result.status]
    if args.verb == "1ag":
        print(f"{algebra.name}: 1-Auslander-Gorenstein = {session.is_1ag()}")
    elif args.verb == "auslander":
        print(f"{algebra.name}: Auslander algebra = {session.is_auslander()}")
    elif args.verb == "tilted":
        print(f"{algebra.name}: tilted = {session.is_tilted()}")
        if session.tilted_witness is not None:
            print(f"  sincere witness (catalog indices): {session.tilted_witness}")
    else:
        verdict = theorem_verdict(session)
        statuses.append(verdict.status)
        print(f"{algebra.name}: 1-AG = {verdict.is_1ag}")
        print(f"  tilted (lhs)            = {verdict.main_theorem_lhs}")
        print(f"  add L = Cogen T_C (rhs) = {verdict.main_theorem_rhs}")
        print(f"  left part               = {verdict.left_part}")
        print(f"  Cogen T_C               = {verdict.cogen_tc}")
        for line in verdict.detail:
            print(f"  {line}")
    print(f"  [{result.name}] {result.status.value}: " + "; ".join(result.evidence))
    if args.json:
        print(result.record())
    return exit_code(statuses)
