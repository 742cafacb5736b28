"""Path basis of kQ/I and the standard modules: simples, projectives, injectives."""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import NotAdmissible
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.quiver import Path, Quiver, Relation
from app.models.representation import QuiverModule
from app.services.linalg_service import prime_field

logger = get_logger(__name__)


def _normalise_relation(relation: Relation, p: int) -> Optional[Relation]:
    """Reduce coefficients mod p and merge repeated paths; None if nothing survives."""
    merged: Dict[Path, int] = {}
    for coef, path in relation.terms:
        merged[path] = (merged.get(path, 0) + coef) % p
    terms = tuple((c, path) for path, c in sorted(merged.items(), key=lambda kv: kv[0].sort_key()) if c)
    return Relation(terms) if terms else None


def build_algebra(
    quiver: Quiver,
    relations: Sequence[Relation],
    p: int = settings.DEFAULT_PRIME,
    cap: int = settings.NILPOTENCY_CAP,
    name: str = "algebra",
) -> AlgebraPresentation:
    """Compute the path basis of kQ/I degree by degree.

    Degree d candidates are the products b.a of a degree d-1 basis path b
    with an arrow a. The relation rows of degree d are u.rho for u in the
    degree d-|rho| basis. Eliminating with the largest candidates first
    leaves the canonically smallest surviving paths as the basis.
    """
    field = prime_field(p)
    rels: List[Relation] = []
    for relation in relations:
        issues = relation.problems()
        if issues:
            raise NotAdmissible("; ".join(issues))
        norm = _normalise_relation(relation, p)
        if norm is not None:
            rels.append(norm)

    arrows = quiver.arrows
    layers: List[List[Path]] = [[Path(v, v) for v in range(quiver.vertex_count)]]
    # steps[d][a] maps degree d-1 coordinates to degree d coordinates
    steps: List[List[np.ndarray]] = [[]]

    def prefix_nf(path: Path) -> np.ndarray:
        """Normal form of a path of length d-1 in the degree d-1 basis."""
        x = np.zeros(len(layers[0]), dtype=np.int64)
        x[path.source] = 1
        for depth, a in enumerate(path.arrows, start=1):
            x = (steps[depth][a] @ x) % p
        return x

    d = 1
    while True:
        prev = layers[d - 1]
        candidates = sorted(
            (Path(b.source, arrows[a].target, b.arrows + (a,)) for b in prev for a in range(len(arrows)) if arrows[a].source == b.target),
            key=Path.sort_key,
        )
        cand_index = {c: i for i, c in enumerate(candidates)}

        rows = []
        for relation in rels:
            if relation.length > d:
                continue
            for u in layers[d - relation.length]:
                if u.target != relation.source:
                    continue
                row = np.zeros(len(candidates), dtype=np.int64)
                for coef, path in relation.terms:
                    # u.path has length d >= 2; reduce all but its last arrow
                    full = u.arrows + path.arrows
                    last = full[-1]
                    x = prefix_nf(Path(u.source, arrows[full[-2]].target, full[:-1]))
                    for j in np.nonzero(x)[0]:
                        b = prev[j]
                        c = Path(b.source, arrows[last].target, b.arrows + (last,))
                        row[cand_index[c]] = (row[cand_index[c]] + coef * int(x[j])) % p
                rows.append(row)

        # Columns reversed so the largest candidates become pivots.
        n = len(candidates)
        if rows:
            R, pivots_rev = field.rref(np.array(rows, dtype=np.int64)[:, ::-1])
            pivots = [n - 1 - c for c in pivots_rev]
        else:
            R, pivots = np.zeros((0, n), dtype=np.int64), []
        pivot_row = {c: i for i, c in enumerate(pivots)}
        basis = [c for i, c in enumerate(candidates) if i not in pivot_row]
        basis_index = {c: i for i, c in enumerate(basis)}

        def candidate_nf(i: int) -> np.ndarray:
            x = np.zeros(len(basis), dtype=np.int64)
            c = candidates[i]
            if c in basis_index:
                x[basis_index[c]] = 1
                return x
            r = pivot_row[i]
            for f in basis:
                coeff = R[r, n - 1 - cand_index[f]]
                if coeff:
                    x[basis_index[f]] = (-coeff) % p
            return x

        layer_steps = []
        for a, arrow in enumerate(arrows):
            m = np.zeros((len(basis), len(prev)), dtype=np.int64)
            for j, b in enumerate(prev):
                if b.target == arrow.source:
                    m[:, j] = candidate_nf(cand_index[Path(b.source, arrow.target, b.arrows + (a,))])
            layer_steps.append(m)

        if not basis:
            break
        if d >= cap:
            raise NotAdmissible(f"paths of length {cap} survive the relations; the ideal is not admissible within the nilpotency cap")
        layers.append(basis)
        steps.append(layer_steps)
        d += 1

    path_basis = tuple(path for layer in layers for path in layer)
    offsets = np.cumsum([0] + [len(layer) for layer in layers])
    dim = len(path_basis)
    tables = []
    for a in range(len(arrows)):
        table = np.zeros((dim, dim), dtype=np.int64)
        for depth in range(1, len(layers)):
            block = steps[depth][a]
            table[offsets[depth] : offsets[depth + 1], offsets[depth - 1] : offsets[depth]] = block
        tables.append(table)

    algebra = AlgebraPresentation(
        name=name,
        quiver=quiver,
        relations=tuple(rels),
        field_prime=p,
        nilpotency_cap=cap,
        path_basis=path_basis,
        right_multiplication_tables=tuple(tables),
    )
    logger.debug(f"✅ Built {algebra!r} with Loewy length {len(layers)}")
    return algebra


# --- Standard modules ---

def simple_module(algebra: AlgebraPresentation, v: int) -> QuiverModule:
    dims = [1 if w == v else 0 for w in range(algebra.vertex_count)]
    maps = [np.zeros((dims[a.target], dims[a.source]), dtype=np.int64) for a in algebra.quiver.arrows]
    return QuiverModule(algebra, dims, maps, check=False)


def projective_module(algebra: AlgebraPresentation, v: int) -> QuiverModule:
    """P_v = e_v Lambda; the space at w has the basis paths v -> w."""
    n = algebra.vertex_count
    blocks = [algebra.paths_between(v, w) for w in range(n)]
    maps = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        table = algebra.right_multiplication_tables[a]
        rows, cols = blocks[arrow.target], blocks[arrow.source]
        maps.append(table[np.ix_(rows, cols)] if rows and cols else np.zeros((len(rows), len(cols)), dtype=np.int64))
    return QuiverModule(algebra, [len(b) for b in blocks], maps)


def injective_module(algebra: AlgebraPresentation, v: int) -> QuiverModule:
    """I_v = D(Lambda e_v), the dual of the projective of the opposite algebra."""
    from app.services.module_service import dual_module

    return dual_module(projective_module(algebra.opposite(), v))


def regular_module(algebra: AlgebraPresentation) -> QuiverModule:
    from app.services.module_service import direct_sum

    return direct_sum(algebra, [projective_module(algebra, v) for v in range(algebra.vertex_count)])


def dual_regular_module(algebra: AlgebraPresentation) -> QuiverModule:
    """D Lambda, the sum of all indecomposable injectives."""
    from app.services.module_service import direct_sum

    return direct_sum(algebra, [injective_module(algebra, v) for v in range(algebra.vertex_count)])


def opposite_algebra(algebra: AlgebraPresentation) -> AlgebraPresentation:
    return algebra.opposite()


def projectives(algebra: AlgebraPresentation) -> List[QuiverModule]:
    return [projective_module(algebra, v) for v in range(algebra.vertex_count)]


def injectives(algebra: AlgebraPresentation) -> List[QuiverModule]:
    return [injective_module(algebra, v) for v in range(algebra.vertex_count)]


def simples(algebra: AlgebraPresentation) -> List[QuiverModule]:
    return [simple_module(algebra, v) for v in range(algebra.vertex_count)]


def basis_labels(algebra: AlgebraPresentation) -> Tuple[str, ...]:
    return tuple(algebra.label(i) for i in range(algebra.dim))
