from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.errors import InvalidModule
from app.models.algebra import AlgebraPresentation


class QuiverModule:
    """A right module over `algebra`, stored as a quiver representation.

    `maps[a]` has shape (dims[target(a)], dims[source(a)]) and acts on column
    vectors, so the path a1.a2...ak acts as maps[ak] @ ... @ maps[a1].
    """

    def __init__(self, algebra: AlgebraPresentation, dims: Sequence[int], maps: Sequence[np.ndarray], check: bool = True):
        self.algebra = algebra
        self.dims: Tuple[int, ...] = tuple(int(d) for d in dims)
        p = algebra.field_prime
        frozen = []
        for m in maps:
            m = np.array(m, dtype=np.int64) % p
            m.setflags(write=False)
            frozen.append(m)
        self.maps: Tuple[np.ndarray, ...] = tuple(frozen)
        self._key: Optional[Tuple] = None
        if check:
            self._validate()

    def _validate(self) -> None:
        quiver = self.algebra.quiver
        if len(self.dims) != quiver.vertex_count:
            raise InvalidModule(f"expected {quiver.vertex_count} vertex dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise InvalidModule("vertex dimensions must be non-negative")
        if len(self.maps) != len(quiver.arrows):
            raise InvalidModule(f"expected {len(quiver.arrows)} arrow maps, got {len(self.maps)}")
        for arrow, m in zip(quiver.arrows, self.maps):
            expected = (self.dims[arrow.target], self.dims[arrow.source])
            if m.shape != expected:
                raise InvalidModule(f"map of arrow '{arrow.id}' has shape {m.shape}, expected {expected}")
        for relation in self.algebra.relations:
            total = np.zeros((self.dims[relation.target], self.dims[relation.source]), dtype=np.int64)
            for coef, path in relation.terms:
                total = total + coef * self.path_matrix(path.arrows, path.source)
            if np.any(total % self.algebra.field_prime):
                raise InvalidModule("module does not satisfy the relations of the algebra")

    def __repr__(self) -> str:
        return f"QuiverModule(dims={self.dims})"

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def support(self) -> List[int]:
        return [v for v, d in enumerate(self.dims) if d > 0]

    @property
    def offsets(self) -> List[int]:
        """Start of each vertex block in the total space."""
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return out

    def path_matrix(self, arrows: Tuple[int, ...], start: int) -> np.ndarray:
        p = self.algebra.field_prime
        m = np.eye(self.dims[start], dtype=np.int64)
        for a in arrows:
            m = (self.maps[a] @ m) % p
        return m

    def key(self) -> Tuple:
        """Hashable exact value, for memoising computations on this module."""
        if self._key is None:
            self._key = (self.dims, tuple(m.tobytes() for m in self.maps))
        return self._key


class ModuleMorphism:
    """Per-vertex matrices `maps[v]` of shape (target.dims[v], source.dims[v])."""

    def __init__(self, source: QuiverModule, target: QuiverModule, maps: Sequence[np.ndarray], check: bool = True):
        self.source = source
        self.target = target
        p = source.algebra.field_prime
        frozen = []
        for m in maps:
            m = np.array(m, dtype=np.int64) % p
            m.setflags(write=False)
            frozen.append(m)
        self.maps: Tuple[np.ndarray, ...] = tuple(frozen)
        if check:
            self._validate()

    def _validate(self) -> None:
        for v, m in enumerate(self.maps):
            expected = (self.target.dims[v], self.source.dims[v])
            if m.shape != expected:
                raise InvalidModule(f"vertex map {v + 1} has shape {m.shape}, expected {expected}")
        p = self.source.algebra.field_prime
        for a, arrow in enumerate(self.source.algebra.quiver.arrows):
            left = self.target.maps[a] @ self.maps[arrow.source]
            right = self.maps[arrow.target] @ self.source.maps[a]
            if np.any((left - right) % p):
                raise InvalidModule(f"morphism does not commute with arrow '{arrow.id}'")

    def __repr__(self) -> str:
        return f"ModuleMorphism({self.source.dims} -> {self.target.dims})"

    @property
    def field_prime(self) -> int:
        return self.source.algebra.field_prime

    def then(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """Composite `other` after `self`."""
        p = self.field_prime
        maps = [(g @ f) % p for f, g in zip(self.maps, other.maps)]
        return ModuleMorphism(self.source, other.target, maps, check=False)

    def __add__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        p = self.field_prime
        return ModuleMorphism(self.source, self.target, [(f + g) % p for f, g in zip(self.maps, other.maps)], check=False)

    def __sub__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        p = self.field_prime
        return ModuleMorphism(self.source, self.target, [(f - g) % p for f, g in zip(self.maps, other.maps)], check=False)

    def scaled(self, c: int) -> "ModuleMorphism":
        p = self.field_prime
        return ModuleMorphism(self.source, self.target, [(int(c) * f) % p for f in self.maps], check=False)

    @property
    def is_zero(self) -> bool:
        return not any(np.any(m) for m in self.maps)

    def rank(self) -> int:
        field = self.source.algebra.field
        return sum(field.rank(m) for m in self.maps)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def flatten(self) -> np.ndarray:
        """Row-major concatenation of the vertex maps (the Hom-system coordinates)."""
        if not self.maps:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([m.reshape(-1) for m in self.maps])

    def total_matrix(self) -> np.ndarray:
        """Block-diagonal matrix on the total spaces."""
        out = np.zeros((self.target.dim, self.source.dim), dtype=np.int64)
        for v, (r, c) in enumerate(zip(self.target.offsets, self.source.offsets)):
            m = self.maps[v]
            out[r : r + m.shape[0], c : c + m.shape[1]] = m
        return out


def identity_morphism(module: QuiverModule) -> ModuleMorphism:
    return ModuleMorphism(module, module, [np.eye(d, dtype=np.int64) for d in module.dims], check=False)


def zero_morphism(source: QuiverModule, target: QuiverModule) -> ModuleMorphism:
    maps = [np.zeros((t, s), dtype=np.int64) for s, t in zip(source.dims, target.dims)]
    return ModuleMorphism(source, target, maps, check=False)


def zero_module(algebra: AlgebraPresentation) -> QuiverModule:
    n = algebra.vertex_count
    maps = [np.zeros((0, 0), dtype=np.int64) for _ in algebra.quiver.arrows]
    return QuiverModule(algebra, [0] * n, maps, check=False)


@dataclass
class HomSpace:
    """Hom(source, target) with a canonical echelon basis.

    `matrix` holds the basis as columns in flattened coordinates
    (see `ModuleMorphism.flatten`).
    """

    source: QuiverModule
    target: QuiverModule
    matrix: np.ndarray
    basis: List[ModuleMorphism] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[1]

    def combination(self, coeffs: Sequence[int]) -> ModuleMorphism:
        p = self.source.algebra.field_prime
        flat = (self.matrix @ np.array(coeffs, dtype=np.int64)) % p
        return morphism_from_flat(self.source, self.target, flat)


@dataclass
class ExtSpace:
    """Ext^1(source, target) computed on the projective presentation of `source`.

    `cocycles` are maps syzygy -> target whose classes form a basis of Ext^1;
    `syzygy_inclusion` embeds the syzygy into the projective cover `cover`.
    """

    source: QuiverModule
    target: QuiverModule
    dimension: int
    cocycles: List[ModuleMorphism]
    syzygy_inclusion: ModuleMorphism
    cover: ModuleMorphism
    cocycle_space: np.ndarray = None  # Hom(syzygy, target) basis columns
    coboundaries: np.ndarray = None  # restrictions of Hom(cover, target), cocycle coordinates


def morphism_from_flat(source: QuiverModule, target: QuiverModule, flat: np.ndarray) -> ModuleMorphism:
    maps, pos = [], 0
    for s, t in zip(source.dims, target.dims):
        maps.append(np.array(flat[pos : pos + s * t]).reshape(t, s))
        pos += s * t
    return ModuleMorphism(source, target, maps, check=False)
