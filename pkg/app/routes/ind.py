import argparse
import json

from app.core.errors import EXIT_OK
from app.models.schemas import CatalogEntry
from app.routes.common import add_algebra_argument, load, table
from app.services.ar_service import enumerate_indecomposables


def register(subparsers) -> None:
    parser = subparsers.add_parser("ind", help="list the indecomposables with pd, id and tau links")
    add_algebra_argument(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    algebra, caps = load(args)
    catalog = enumerate_indecomposables(algebra, caps)
    entries = [CatalogEntry(**row) for row in catalog.summary_rows()]
    rows = [
        [e.index, tuple(e.dims), e.pd, e.id, "-" if e.tau is None else e.tau, "-" if e.tau_inv is None else e.tau_inv,
         ("P" if e.projective else "") + ("I" if e.injective else "")]
        for e in entries
    ]
    print(f"{algebra.name}: {catalog.size} indecomposables")
    print(table(["#", "dims", "pd", "id", "tau", "tau^-1", "proj/inj"], rows))
    if args.json:
        for e in entries:
            print(json.dumps({"kind": "catalog", "algebra": algebra.name, **e.model_dump(mode="json")}, sort_keys=True))
    return EXIT_OK
