"""Reader for the line-oriented `.alg` algebra format.

    name: A2
    prime: 101
    vertices: 2
    arrow: a: 1 -> 2
    relation: 2*a.b - c.d = 0        # a.b means first a, then b
    caps: nilpotency=30 resolution=24 catalog=256
"""
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.core.config import RunCaps, settings
from app.core.errors import ParseError
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.quiver import MIXED_LENGTH_MESSAGE, Arrow, Path, Quiver, Relation
from app.services.algebra_service import build_algebra
from app.services.linalg_service import MAX_PRIME, is_prime

logger = get_logger(__name__)

KEYS = ("name", "prime", "vertices", "arrow", "relation", "caps")
CAP_KEYS = ("nilpotency", "resolution", "catalog")

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_ARROW = re.compile(rf"^\s*({_IDENT})\s*:\s*(\d+)\s*->\s*(\d+)\s*$")
_TERM = re.compile(rf"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?({_IDENT}(?:\s*\.\s*{_IDENT})*)\s*")
_CAP = re.compile(r"\s*([a-z]+)\s*=\s*(\d+)\s*")


@dataclass
class AlgebraFile:
    """The parsed content of one `.alg` file, before the algebra is built."""

    name: str = "algebra"
    prime: int = settings.DEFAULT_PRIME
    vertices: Optional[int] = None
    arrows: List[Arrow] = field(default_factory=list)
    arrow_lines: List[Tuple[int, int]] = field(default_factory=list)
    # (line, column, signed coefficient, arrow ids)
    relations: List[List[Tuple[int, int, int, List[str]]]] = field(default_factory=list)
    caps: Dict[str, int] = field(default_factory=dict)


def _int(value: str, line: int, column: int, what: str) -> int:
    if not re.fullmatch(r"\s*\d+\s*", value):
        raise ParseError(line, column, f"{what} must be a non-negative integer, got '{value.strip()}'")
    return int(value)


def _parse_relation(value: str, line: int, offset: int) -> List[Tuple[int, int, int, List[str]]]:
    body, equals, rhs = value.partition("=")
    if not equals or rhs.strip() != "0":
        raise ParseError(line, offset + len(body), "relation must end in '= 0'")
    terms = []
    pos = 0
    while pos < len(body.rstrip()):
        match = _TERM.match(body, pos)
        if not match or match.end() == pos:
            raise ParseError(line, offset + pos, f"cannot read a term at '{body[pos:].strip()}'")
        sign, coef, path = match.groups()
        if terms and sign is None:
            raise ParseError(line, offset + pos, "terms must be joined by '+' or '-'")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        column = offset + match.start(3)
        terms.append((line, column, c, [a.strip() for a in path.split(".")]))
        pos = match.end()
    if not terms:
        raise ParseError(line, offset, "relation has no terms")
    return terms


def read_algebra_file(text: str) -> AlgebraFile:
    """Parse the text into an AlgebraFile; every error carries a 1-based line and column."""
    parsed = AlgebraFile()
    seen_single = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, colon, value = line.partition(":")
        key_column = len(line) - len(line.lstrip()) + 1
        key = key.strip()
        if not colon:
            raise ParseError(number, key_column, "expected 'key: value'")
        if key not in KEYS:
            raise ParseError(number, key_column, f"unknown key '{key}'")
        if key in ("name", "prime", "vertices", "caps"):
            if key in seen_single:
                raise ParseError(number, key_column, f"'{key}' given twice")
            seen_single.add(key)
        value_column = len(key) + key_column + 1
        if key == "name":
            parsed.name = value.strip() or parsed.name
        elif key == "prime":
            p = _int(value, number, value_column, "prime")
            if not is_prime(p) or p >= MAX_PRIME:
                raise ParseError(number, value_column, f"{p} is not a supported prime")
            parsed.prime = p
        elif key == "vertices":
            parsed.vertices = _int(value, number, value_column, "vertices")
        elif key == "arrow":
            match = _ARROW.match(value)
            if not match:
                raise ParseError(number, value_column, "arrow must read '<id>: <source> -> <target>'")
            arrow_id, source, target = match.group(1), int(match.group(2)), int(match.group(3))
            if any(a.id == arrow_id for a in parsed.arrows):
                raise ParseError(number, value_column, f"duplicate arrow id '{arrow_id}'")
            parsed.arrows.append(Arrow(arrow_id, source - 1, target - 1))
            parsed.arrow_lines.append((number, value_column))
        elif key == "relation":
            parsed.relations.append(_parse_relation(value, number, value_column))
        elif key == "caps":
            for match in re.finditer(r"\S+", value):
                cap = _CAP.fullmatch(match.group(0))
                column = value_column + match.start()
                if not cap or cap.group(1) not in CAP_KEYS:
                    raise ParseError(number, column, f"unknown cap '{match.group(0)}'")
                if int(cap.group(2)) < 1:
                    raise ParseError(number, column, f"cap '{cap.group(1)}' must be at least 1")
                parsed.caps[cap.group(1)] = int(cap.group(2))
    return parsed


def _quiver(parsed: AlgebraFile, last_line: int) -> Quiver:
    if parsed.vertices is None:
        raise ParseError(last_line, 1, "missing 'vertices:' line")
    for arrow, (line, column) in zip(parsed.arrows, parsed.arrow_lines):
        for end in (arrow.source, arrow.target):
            if not 0 <= end < parsed.vertices:
                raise ParseError(line, column, f"arrow '{arrow.id}' uses vertex {end + 1} outside 1..{parsed.vertices}")
    return Quiver(parsed.vertices, tuple(parsed.arrows))


def _relations(parsed: AlgebraFile, quiver: Quiver) -> List[Relation]:
    ids = {a.id: i for i, a in enumerate(quiver.arrows)}
    relations = []
    for terms in parsed.relations:
        built: List[Tuple[int, Path]] = []
        for line, column, coefficient, arrow_ids in terms:
            unknown = [a for a in arrow_ids if a not in ids]
            if unknown:
                raise ParseError(line, column, f"unknown arrow '{unknown[0]}'")
            try:
                path = quiver.make_path(tuple(ids[a] for a in arrow_ids))
            except ValueError as exc:
                raise ParseError(line, column, str(exc)) from exc
            if path.length < 2:
                raise ParseError(line, column, "relation paths must have length >= 2")
            if built and (path.source, path.target) != (built[0][1].source, built[0][1].target):
                raise ParseError(line, column, "relation paths must be parallel")
            if built and path.length != built[0][1].length:
                raise ParseError(line, column, MIXED_LENGTH_MESSAGE)
            built.append((coefficient, path))
        relations.append(Relation(tuple(built)))
    return relations


def parse_algebra_file(
    text: str,
    prime: Optional[int] = None,
    nilpotency: Optional[int] = None,
    resolution: Optional[int] = None,
    catalog: Optional[int] = None,
    seed: Optional[int] = None,
) -> Tuple[AlgebraPresentation, RunCaps]:
    """Build the algebra described by `text` together with the caps for the run.

    Keyword arguments are command-line overrides; they win over the file's
    `prime:` and `caps:` lines, which win over the Settings defaults.
    """
    parsed = read_algebra_file(text)
    quiver = _quiver(parsed, max(1, len(text.splitlines())))
    relations = _relations(parsed, quiver)
    caps = (
        RunCaps()
        .merged(**{key: parsed.caps.get(key) for key in CAP_KEYS})
        .merged(nilpotency=nilpotency, resolution=resolution, catalog=catalog, seed=seed)
    )
    p = prime if prime is not None else parsed.prime
    algebra = build_algebra(quiver, relations, p=p, cap=caps.nilpotency, name=parsed.name)
    logger.info(f"✅ Built {algebra.name}: {quiver.vertex_count} vertices, dimension {algebra.dim} over F_{p}")
    return algebra, caps
