from dataclasses import dataclass
from typing import List, Tuple

MIXED_LENGTH_MESSAGE = (
    "relation paths must all have the same length (only homogeneous relations are supported)"
)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: int  # 0-indexed internally
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path in the quiver, composed left to right: (a, b) means first a, then b.

    Trivial paths carry no arrows and have source == target.
    """

    source: int
    target: int
    arrows: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sort_key(self) -> Tuple:
        return (self.length, self.arrows, self.source)


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for arrow in self.arrows:
            if arrow.id in seen:
                raise ValueError(f"duplicate arrow id '{arrow.id}'")
            seen.add(arrow.id)
            for end in (arrow.source, arrow.target):
                if not 0 <= end < self.vertex_count:
                    raise ValueError(f"arrow '{arrow.id}' uses vertex {end + 1} outside 1..{self.vertex_count}")

    def arrow_index(self, arrow_id: str) -> int:
        for i, arrow in enumerate(self.arrows):
            if arrow.id == arrow_id:
                return i
        raise KeyError(arrow_id)

    def make_path(self, arrow_indices: Tuple[int, ...]) -> Path:
        """Build a path from arrow indices; raises ValueError if not composable."""
        if not arrow_indices:
            raise ValueError("use Path(v, v) for trivial paths")
        for left, right in zip(arrow_indices, arrow_indices[1:]):
            if self.arrows[left].target != self.arrows[right].source:
                raise ValueError(
                    f"arrows '{self.arrows[left].id}' and '{self.arrows[right].id}' are not composable"
                )
        return Path(
            source=self.arrows[arrow_indices[0]].source,
            target=self.arrows[arrow_indices[-1]].target,
            arrows=tuple(arrow_indices),
        )

    def reversed(self) -> "Quiver":
        return Quiver(
            vertex_count=self.vertex_count,
            arrows=tuple(Arrow(a.id, a.target, a.source) for a in self.arrows),
        )

    def path_label(self, path: Path) -> str:
        if not path.arrows:
            return f"e{path.source + 1}"
        return ".".join(self.arrows[i].id for i in path.arrows)


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, read as `sum = 0`."""

    terms: Tuple[Tuple[int, Path], ...]

    @property
    def source(self) -> int:
        return self.terms[0][1].source

    @property
    def target(self) -> int:
        return self.terms[0][1].target

    @property
    def length(self) -> int:
        return self.terms[0][1].length

    def problems(self) -> List[str]:
        """Admissibility defects; empty when the relation is usable."""
        issues = []
        if not self.terms:
            return ["relation has no terms"]
        lengths = {path.length for _, path in self.terms}
        ends = {(path.source, path.target) for _, path in self.terms}
        if min(lengths) < 2:
            issues.append("relation paths must have length >= 2")
        if len(ends) != 1:
            issues.append("relation paths must be parallel")
        if len(lengths) != 1:
            issues.append(MIXED_LENGTH_MESSAGE)
        return issues

    def reversed(self) -> "Relation":
        return Relation(
            terms=tuple(
                (c, Path(path.target, path.source, tuple(reversed(path.arrows))))
                for c, path in self.terms
            )
        )
