"""Auslander-Reiten translates, almost split sequences and the catalog of indecomposables."""
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from app.core.config import RunCaps, settings
from app.core.errors import RepInfiniteSuspected, ValidationFailed
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.catalog import ARSequence, IndCatalog
from app.models.homdim import HomDim
from app.models.quiver import Path
from app.models.representation import ModuleMorphism, QuiverModule, zero_module
from app.services import homology_service as hs
from app.services import module_service as ms
from app.services.algebra_service import injectives, projectives, simples

logger = get_logger(__name__)


# --- Transpose and translates ---

def _block_offsets(algebra: AlgebraPresentation, vertices: List[int], w: int) -> List[int]:
    out, acc = [], 0
    for v in vertices:
        out.append(acc)
        acc += len(algebra.paths_between(v, w))
    return out


def _opposite_element(algebra: AlgebraPresentation, element: np.ndarray) -> np.ndarray:
    """The same element read in the opposite algebra, normalised there."""
    opposite = algebra.opposite()
    out = np.zeros(opposite.dim, dtype=np.int64)
    for index in np.nonzero(element)[0]:
        path = algebra.path_basis[index]
        reversed_path = Path(path.target, path.source, tuple(reversed(path.arrows)))
        out = (out + int(element[index]) * opposite.normal_form(reversed_path)) % algebra.field_prime
    return out


def transpose(module: QuiverModule) -> QuiverModule:
    """Tr M over the opposite algebra, from the minimal presentation P1 -> P0 -> M -> 0."""
    algebra = module.algebra
    opposite = algebra.opposite()

    def compute():
        top_vertices, _ = hs.cover_generators(module)
        omega, inclusion, _ = hs.syzygy_with_inclusion(module)
        if omega.is_zero:
            return zero_module(opposite)
        next_vertices, next_generators = hs.cover_generators(omega)

        # lam[i][j] in e_{v_i} Lambda e_{u_j}: image of copy j's generator in copy i of P0
        lam: List[List[np.ndarray]] = [[None] * len(next_vertices) for _ in top_vertices]
        for j, (u, g) in enumerate(zip(next_vertices, next_generators)):
            image = (inclusion.maps[u] @ g) % algebra.field_prime
            offsets = _block_offsets(algebra, top_vertices, u)
            for i, v in enumerate(top_vertices):
                element = np.zeros(algebra.dim, dtype=np.int64)
                for k, index in enumerate(algebra.paths_between(v, u)):
                    element[index] = image[offsets[i] + k]
                lam[i][j] = _opposite_element(algebra, element)

        # Hom(-, Lambda) turns the presentation into sum P^op_{v_i} -> sum P^op_{u_j}
        target = hs.projective_sum(opposite, next_vertices)
        generators = []
        for i, v in enumerate(top_vertices):
            parts = [lam[i][j][opposite.paths_between(u, v)] for j, u in enumerate(next_vertices)]
            generators.append(np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64))
        dual_presentation = hs.morphism_from_generators(opposite, top_vertices, generators, target)
        return ms.cokernel(dual_presentation)[0]

    return algebra.memo(("transpose", module.key()), compute)


def tau(module: QuiverModule) -> QuiverModule:
    """D Tr M; zero on projectives."""
    return ms.dual_module(transpose(module))


def tau_inv(module: QuiverModule) -> QuiverModule:
    """Tr D M; zero on injectives."""
    return transpose(ms.dual_module(module))


# --- Almost split sequences ---

def _lift_to_syzygy(ext, endo: ModuleMorphism) -> ModuleMorphism:
    """s: Omega M -> Omega M induced by a lift of `endo` to the projective cover."""
    field = endo.source.algebra.field
    epi, inclusion = ext.cover, ext.syzygy_inclusion
    cover_endos = ms.hom(epi.source, epi.source)
    columns = np.column_stack([h.then(epi).flatten() for h in cover_endos.basis])
    x = field.solve(columns, epi.then(endo).flatten().reshape(-1, 1))
    if x is None:
        raise ValidationFailed("endomorphism does not lift to the projective cover")
    lifted = cover_endos.combination(x[:, 0])
    maps = []
    for v in range(len(inclusion.maps)):
        maps.append(field.coordinates(inclusion.maps[v], field.mul(lifted.maps[v], inclusion.maps[v])))
    return ModuleMorphism(inclusion.source, inclusion.source, maps, check=False)


def _ext_socle(ext, seed: int) -> np.ndarray:
    """Columns: basis of the classes annihilated by rad End(M)."""
    field = ext.source.algebra.field
    radical = ms.endomorphism_radical(ext.source, seed=seed)
    blocks = []
    for r in radical:
        s = _lift_to_syzygy(ext, r)
        action = np.column_stack([hs.ext_class_coordinates(ext, s.then(phi)) for phi in ext.cocycles])
        blocks.append(action)
    if not blocks:
        return field.identity(ext.dimension)
    return field.kernel_basis(np.vstack(blocks))


def _combine(ext, coeffs: np.ndarray) -> ModuleMorphism:
    total = ext.cocycles[0].scaled(int(coeffs[0]))
    for c, phi in zip(coeffs[1:], ext.cocycles[1:]):
        total = total + phi.scaled(int(c))
    return total


def ar_sequence(
    module: QuiverModule,
    catalog: Optional[IndCatalog] = None,
    seed: int = settings.SEED,
    budget: int = settings.RETRY_BUDGET,
) -> ARSequence:
    """0 -> tau M -> E -> M -> 0 from a socle element of Ext^1(M, tau M) over End(M).

    With a catalog, each candidate is validated as almost split and the
    first that passes is returned.
    """
    if hs.is_projective(module):
        raise ValueError("almost split sequences end in non-projective modules")
    left = tau(module)
    ext = hs.ext1(module, left)
    if ext.dimension == 0:
        raise ValidationFailed(f"Ext^1(M, tau M) vanishes for M of dimension vector {module.dims}")
    field = module.algebra.field
    socle_basis = _ext_socle(ext, seed)
    if socle_basis.shape[1] == 0:
        raise ValidationFailed("Ext^1(M, tau M) has zero socle over End(M)")
    rng = np.random.default_rng(seed)
    candidates = [socle_basis[:, k] for k in range(socle_basis.shape[1])]
    for attempt in range(len(candidates) + budget):
        if attempt < len(candidates):
            coeffs = candidates[attempt]
        else:
            coeffs = field.mul(socle_basis, field.random_matrix(rng, socle_basis.shape[1], 1))[:, 0]
        if not np.any(coeffs):
            continue
        middle, inclusion, projection = hs.extension_module(ext, _combine(ext, coeffs))
        sequence = ARSequence(left=left, middle=middle, right=module, inclusion=inclusion, projection=projection)
        if catalog is None or validate_ar_sequence(sequence, catalog):
            return sequence
        if socle_basis.shape[1] == 1:
            break
    raise ValidationFailed(f"no almost split sequence validated for dimension vector {module.dims}")


def _lifts_through(space_columns: np.ndarray, projection: ModuleMorphism, source: QuiverModule) -> np.ndarray:
    columns = [g.then(projection).flatten() for g in ms.hom(source, projection.source).basis]
    if not columns:
        return np.zeros((space_columns.shape[0], 0), dtype=np.int64)
    return np.column_stack(columns)


def validate_ar_sequence(sequence: ARSequence, catalog: IndCatalog) -> bool:
    """Exact, non-split, and every non-retraction from a catalog entry lifts through E -> M."""
    field = sequence.right.algebra.field
    if sequence.middle.dims != tuple(a + b for a, b in zip(sequence.left.dims, sequence.right.dims)):
        return False
    if not (sequence.inclusion.is_injective() and sequence.projection.is_surjective()):
        return False
    if not sequence.inclusion.then(sequence.projection).is_zero:
        return False
    module = sequence.right
    own = catalog.index_of(module)
    identity = ms.identity(module).flatten().reshape(-1, 1)
    lifts = _lifts_through(identity, sequence.projection, module)
    if lifts.shape[1] and field.in_span(lifts, identity):
        return False
    for i, entry in enumerate(catalog.modules):
        if i == own:
            targets = [r.flatten() for r in ms.endomorphism_radical(module, seed=catalog.seed)]
            source = module
        else:
            targets = [f.flatten() for f in ms.hom(entry, module).basis]
            source = entry
        if not targets:
            continue
        wanted = np.column_stack(targets)
        lifts = _lifts_through(wanted, sequence.projection, source)
        if lifts.shape[1] == 0 or not field.in_span(lifts, wanted):
            return False
    return True


# --- Catalog ---

def _dimension_table(graph: nx.DiGraph, terminal: List[bool], cap: int) -> List[HomDim]:
    """Longest walk to a terminal node; nodes that reach a cycle are infinite."""
    cyclic: Set[int] = set()
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1 or any(graph.has_edge(n, n) for n in component):
            cyclic |= component
    table: Dict[int, HomDim] = {}
    infinite = {n for n in graph.nodes if n in cyclic or nx.descendants(graph, n) & cyclic}
    finite_part = graph.subgraph(n for n in graph.nodes if n not in infinite)
    for node in reversed(list(nx.topological_sort(finite_part))):
        successors = list(finite_part.successors(node))
        if terminal[node] or not successors:
            table[node] = HomDim.finite(0)
        else:
            table[node] = HomDim.finite(1 + max(table[s].value for s in successors))
    out = []
    for node in sorted(graph.nodes):
        if node in infinite:
            out.append(HomDim.infinite())
        elif table[node].value > cap:
            out.append(HomDim.exceeded(cap))
        else:
            out.append(table[node])
    return out


def enumerate_indecomposables(algebra: AlgebraPresentation, caps: RunCaps = RunCaps()) -> IndCatalog:
    """Close the projectives, injectives and simples under tau, tau^-1 and AR middle terms."""

    def compute():
        return _build_catalog(algebra, caps)

    return algebra.memo(("catalog", caps.catalog, caps.resolution, caps.seed), compute)


def _build_catalog(algebra: AlgebraPresentation, caps: RunCaps) -> IndCatalog:
    seed = caps.seed
    found: List[QuiverModule] = []
    queue: List[QuiverModule] = []
    sequences: Dict[Tuple, ARSequence] = {}

    def insert(candidate: QuiverModule) -> None:
        for piece in ms.indecomposable_summands(candidate, seed=seed):
            if ms.index_in(piece, found, seed=seed) is None:
                found.append(piece)
                queue.append(piece)
                if len(found) > caps.catalog:
                    raise RepInfiniteSuspected(f"more than {caps.catalog} indecomposables found; treating {algebra.name} as representation-infinite")

    for seed_module in projectives(algebra) + injectives(algebra) + simples(algebra):
        insert(seed_module)
    while queue:
        module = queue.pop(0)
        if not hs.is_projective(module):
            insert(tau(module))
            sequences[module.key()] = ar_sequence(module, seed=seed)
            insert(sequences[module.key()].middle)
        if not hs.is_injective(module):
            insert(tau_inv(module))

    order = sorted(range(len(found)), key=lambda i: (ms.canonical_key(found[i]), i))
    modules = [found[i] for i in order]
    n = len(modules)
    logger.info(f"✅ Catalog of {algebra.name} closed with {n} indecomposables")

    catalog = IndCatalog(
        algebra=algebra,
        modules=modules,
        hom_dims=np.array([[ms.hom_dim(x, y) for y in modules] for x in modules], dtype=np.int64).reshape(n, n),
        tau_index={},
        tau_inv_index={},
        projective=[hs.is_projective(m) for m in modules],
        injective=[hs.is_injective(m) for m in modules],
        incoming={},
        syzygy_summands={},
        cosyzygy_summands={},
        seed=seed,
    )

    def locate(module: QuiverModule) -> int:
        i = catalog.index_of(module)
        if i is None:
            raise ValidationFailed(f"catalog of {algebra.name} is not closed: missing dimension vector {module.dims}")
        return i

    def summand_indices(module: QuiverModule) -> List[Tuple[int, int]]:
        return [(locate(x), k) for x, k in ms.decompose(module, seed=seed)]

    for i, module in enumerate(modules):
        if not catalog.projective[i]:
            catalog.tau_index[i] = locate(tau(module))
            sequence = sequences[module.key()]
            catalog.sequences[i] = sequence
            catalog.incoming[i] = summand_indices(sequence.middle)
        else:
            catalog.incoming[i] = summand_indices(hs.radical(module)[0])
        if not catalog.injective[i]:
            catalog.tau_inv_index[i] = locate(tau_inv(module))
        catalog.syzygy_summands[i] = [j for j, _ in summand_indices(hs.syzygy(module))]
        catalog.cosyzygy_summands[i] = [j for j, _ in summand_indices(hs.cosyzygy(module))]

    syzygy_graph = nx.DiGraph()
    syzygy_graph.add_nodes_from(range(n))
    cosyzygy_graph = nx.DiGraph()
    cosyzygy_graph.add_nodes_from(range(n))
    for i in range(n):
        syzygy_graph.add_edges_from((i, j) for j in catalog.syzygy_summands[i])
        cosyzygy_graph.add_edges_from((i, j) for j in catalog.cosyzygy_summands[i])
    catalog.pd_table = _dimension_table(syzygy_graph, catalog.projective, caps.resolution)
    catalog.id_table = _dimension_table(cosyzygy_graph, catalog.injective, caps.resolution)
    return catalog


def predecessors(catalog: IndCatalog, j: int) -> Set[int]:
    """Indices i with a chain of nonzero maps X_i -> ... -> X_j, j included."""
    return nx.ancestors(catalog.hom_graph(), j) | {j}


def dims_label(module: QuiverModule) -> str:
    return "(" + ",".join(str(d) for d in module.dims) + ")"


def ar_quiver_dot(catalog: IndCatalog) -> str:
    """DOT digraph: irreducible maps solid (labelled when multiple), tau links dashed."""
    lines = [f'digraph "{catalog.algebra.name}" {{', "  rankdir=LR;"]
    for i, module in enumerate(catalog.modules):
        shape = "box" if catalog.projective[i] or catalog.injective[i] else "ellipse"
        lines.append(f'  n{i} [label="{i}: {dims_label(module)}", shape={shape}];')
    for target in range(catalog.size):
        for source, mult in catalog.incoming.get(target, []):
            label = f' [label="{mult}"]' if mult > 1 else ""
            lines.append(f"  n{source} -> n{target}{label};")
    for i, j in sorted(catalog.tau_index.items()):
        lines.append(f"  n{i} -> n{j} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
