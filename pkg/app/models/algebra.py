from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from app.models.quiver import Path, Quiver, Relation
from app.services.linalg_service import PrimeField, prime_field


class AlgebraPresentation:
    """The bound quiver algebra kQ/I with its computed path basis.

    Built by `algebra_service.build_algebra`; immutable afterwards. Element
    vectors are int64 arrays of length `dim`, indexed by `path_basis`.
    """

    def __init__(
        self,
        name: str,
        quiver: Quiver,
        relations: Tuple[Relation, ...],
        field_prime: int,
        nilpotency_cap: int,
        path_basis: Tuple[Path, ...],
        right_multiplication_tables: Tuple[np.ndarray, ...],
    ):
        self.name = name
        self.quiver = quiver
        self.relations = relations
        self.field_prime = field_prime
        self.nilpotency_cap = nilpotency_cap
        self.path_basis = path_basis
        self.right_multiplication_tables = right_multiplication_tables
        for table in right_multiplication_tables:
            table.setflags(write=False)
        self.basis_index: Dict[Path, int] = {path: i for i, path in enumerate(path_basis)}
        self._between: Dict[Tuple[int, int], List[int]] = {}
        for i, path in enumerate(path_basis):
            self._between.setdefault((path.source, path.target), []).append(i)
        self._opposite: Optional["AlgebraPresentation"] = None
        self._memo: Dict[Tuple, Any] = {}

    def __repr__(self) -> str:
        return f"AlgebraPresentation({self.name!r}, vertices={self.vertex_count}, dim={self.dim}, p={self.field_prime})"

    @property
    def field(self) -> PrimeField:
        return prime_field(self.field_prime)

    @property
    def dim(self) -> int:
        return len(self.path_basis)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def arrow_count(self) -> int:
        return len(self.quiver.arrows)

    def paths_between(self, source: int, target: int) -> List[int]:
        """Basis indices of the paths from `source` to `target`, canonical order."""
        return self._between.get((source, target), [])

    def trivial_index(self, v: int) -> int:
        return self.basis_index[Path(v, v)]

    def unit_vector(self, index: int) -> np.ndarray:
        x = np.zeros(self.dim, dtype=np.int64)
        x[index] = 1
        return x

    def right_action(self, x: np.ndarray, arrows: Tuple[int, ...]) -> np.ndarray:
        """x * a1 * a2 * ... reduced to the path basis."""
        p = self.field_prime
        for a in arrows:
            x = (self.right_multiplication_tables[a] @ x) % p
        return x

    def normal_form(self, path: Path) -> np.ndarray:
        return self.right_action(self.unit_vector(self.trivial_index(path.source)), path.arrows)

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """The product x * y of two algebra elements."""
        p = self.field_prime
        out = np.zeros(self.dim, dtype=np.int64)
        for j in np.nonzero(y)[0]:
            path = self.path_basis[j]
            if path.arrows:
                term = self.right_action(x, path.arrows)
            else:
                term = x * self.ends_at(path.source)
            out = (out + int(y[j]) * term) % p
        return out

    def ends_at(self, v: int) -> np.ndarray:
        """0/1 mask of the basis paths ending at v (right multiplication by e_v)."""
        return np.array([1 if path.target == v else 0 for path in self.path_basis], dtype=np.int64)

    def label(self, index: int) -> str:
        return self.quiver.path_label(self.path_basis[index])

    def opposite(self) -> "AlgebraPresentation":
        """The opposite algebra, built once; opposite().opposite() is self."""
        if self._opposite is None:
            from app.services.algebra_service import build_algebra

            opp = build_algebra(
                self.quiver.reversed(),
                [rel.reversed() for rel in self.relations],
                self.field_prime,
                self.nilpotency_cap,
                name=f"{self.name}^op",
            )
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def memo(self, key: Tuple, compute: Callable[[], Any]) -> Any:
        """Per-algebra cache for derived module data (covers, envelopes, translates)."""
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]
