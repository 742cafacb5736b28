"""Radicals, covers, syzygies, Ext^1 and the homological dimensions of an algebra."""
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import CrossCheckMismatch
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.homdim import HomDim, max_dim
from app.models.representation import ExtSpace, ModuleMorphism, QuiverModule
from app.services import module_service as ms
from app.services.algebra_service import (
    dual_regular_module,
    projective_module,
    regular_module,
    simple_module,
)

logger = get_logger(__name__)


# --- Radical, socle, top ---

def _radical_bases(module: QuiverModule) -> List[np.ndarray]:
    field = module.algebra.field
    bases = []
    for v, d in enumerate(module.dims):
        incoming = [module.maps[a] for a, arrow in enumerate(module.algebra.quiver.arrows) if arrow.target == v]
        if incoming and d:
            bases.append(field.image_basis(np.hstack(incoming)))
        else:
            bases.append(field.zeros(d, 0))
    return bases


def radical(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism]:
    """rad M, the sum of the images of all arrow maps, with its inclusion."""
    return ms.submodule(module, _radical_bases(module))


def socle(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism]:
    """soc M, the joint kernel of all arrow maps, with its inclusion."""
    field = module.algebra.field
    bases = []
    for v, d in enumerate(module.dims):
        outgoing = [module.maps[a] for a, arrow in enumerate(module.algebra.quiver.arrows) if arrow.source == v]
        bases.append(field.kernel_basis(np.vstack(outgoing)) if outgoing and d else field.identity(d))
    return ms.submodule(module, bases)


def top(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism]:
    return ms.quotient(module, _radical_bases(module))


# --- Projective covers and injective envelopes ---

def _projective_dims(algebra: AlgebraPresentation) -> List[int]:
    return algebra.memo(("projective-dims",), lambda: [projective_module(algebra, v).dim for v in range(algebra.vertex_count)])


def _injective_dims(algebra: AlgebraPresentation) -> List[int]:
    return algebra.memo(("injective-dims",), lambda: [sum(len(algebra.paths_between(w, v)) for w in range(algebra.vertex_count)) for v in range(algebra.vertex_count)])


def projective_sum(algebra: AlgebraPresentation, vertices: Sequence[int]) -> QuiverModule:
    return ms.direct_sum(algebra, [projective_module(algebra, v) for v in vertices])


def morphism_from_generators(
    algebra: AlgebraPresentation, vertices: Sequence[int], generators: Sequence[np.ndarray], target: QuiverModule
) -> ModuleMorphism:
    """The map from the sum of P_v (v in `vertices`) sending e_v of copy k to generators[k]."""
    source = projective_sum(algebra, vertices)
    p = algebra.field_prime
    maps = []
    for w in range(algebra.vertex_count):
        block = np.zeros((target.dims[w], source.dims[w]), dtype=np.int64)
        col = 0
        for v, x in zip(vertices, generators):
            for index in algebra.paths_between(v, w):
                path = algebra.path_basis[index]
                block[:, col] = (target.path_matrix(path.arrows, v) @ x) % p
                col += 1
        maps.append(block)
    return ModuleMorphism(source, target, maps, check=False)


def cover_generators(module: QuiverModule) -> Tuple[List[int], List[np.ndarray]]:
    """Vertices and lifted top basis vectors generating `module` minimally."""
    field = module.algebra.field
    vertices, generators = [], []
    for v, rad in enumerate(_radical_bases(module)):
        section = field.right_inverse(field.cokernel_projection(rad))
        for j in range(section.shape[1]):
            vertices.append(v)
            generators.append(section[:, j])
    return vertices, generators


def projective_cover(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism]:
    algebra = module.algebra

    def compute():
        vertices, generators = cover_generators(module)
        epi = morphism_from_generators(algebra, vertices, generators, module)
        assert epi.is_surjective(), "projective cover is not surjective"
        assert ms.top_dims(epi.source) == ms.top_dims(module), "projective cover is not minimal"
        return epi.source, epi

    return algebra.memo(("cover", module.key()), compute)


def injective_envelope(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism]:
    """Dual of the projective cover of D M over the opposite algebra."""
    algebra = module.algebra

    def compute():
        _, epi = projective_cover(ms.dual_module(module))
        envelope = ms.dual_module(epi.source)
        mono = ModuleMorphism(module, envelope, [m.T for m in epi.maps], check=False)
        assert mono.is_injective(), "injective envelope is not injective"
        assert ms.socle_dims(envelope) == ms.socle_dims(module), "injective envelope is not minimal"
        return envelope, mono

    return algebra.memo(("envelope", module.key()), compute)


def syzygy_with_inclusion(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism, ModuleMorphism]:
    """(Omega M, inclusion into the cover, the cover epimorphism)."""
    algebra = module.algebra

    def compute():
        _, epi = projective_cover(module)
        omega, inclusion = ms.kernel(epi)
        return omega, inclusion, epi

    return algebra.memo(("syzygy", module.key()), compute)


def syzygy(module: QuiverModule) -> QuiverModule:
    return syzygy_with_inclusion(module)[0]


def cosyzygy_with_projection(module: QuiverModule) -> Tuple[QuiverModule, ModuleMorphism, ModuleMorphism]:
    """(Omega^-1 M, projection from the envelope, the envelope monomorphism)."""
    algebra = module.algebra

    def compute():
        _, mono = injective_envelope(module)
        co, projection = ms.cokernel(mono)
        return co, projection, mono

    return algebra.memo(("cosyzygy", module.key()), compute)


def cosyzygy(module: QuiverModule) -> QuiverModule:
    return cosyzygy_with_projection(module)[0]


def is_projective(module: QuiverModule) -> bool:
    sizes = _projective_dims(module.algebra)
    return sum(t * s for t, s in zip(ms.top_dims(module), sizes)) == module.dim


def is_injective(module: QuiverModule) -> bool:
    sizes = _injective_dims(module.algebra)
    return sum(t * s for t, s in zip(ms.socle_dims(module), sizes)) == module.dim


# --- Ext^1 ---

def ext1(source: QuiverModule, target: QuiverModule) -> ExtSpace:
    """Ext^1(M, N) = Hom(Omega M, N) modulo the maps that extend to the projective cover."""
    field = source.algebra.field
    omega, inclusion, epi = syzygy_with_inclusion(source)
    cocycles = ms.hom(omega, target)
    extendable = ms.hom(epi.source, target)
    h = cocycles.dimension
    columns = [inclusion.then(g).flatten() for g in extendable.basis]
    if columns and h:
        boundaries = field.coordinates(cocycles.matrix, np.column_stack(columns))
        _, pivots = field.rref(boundaries.T)
    else:
        boundaries = field.zeros(h, 0)
        pivots = []
    complement = [j for j in range(h) if j not in set(pivots)]
    return ExtSpace(
        source=source,
        target=target,
        dimension=len(complement),
        cocycles=[cocycles.basis[j] for j in complement],
        syzygy_inclusion=inclusion,
        cover=epi,
        cocycle_space=cocycles.matrix,
        coboundaries=boundaries,
    )


def ext1_dim(source: QuiverModule, target: QuiverModule) -> int:
    field = source.algebra.field

    def compute():
        omega, inclusion, epi = syzygy_with_inclusion(source)
        h = ms.hom_dim(omega, target)
        if h == 0:
            return 0
        columns = [inclusion.then(g).flatten() for g in ms.hom(epi.source, target).basis]
        return h - (field.rank(np.column_stack(columns)) if columns else 0)

    return source.algebra.memo(("ext1", source.key(), target.key()), compute)


def ext1_via_cosyzygy(source: QuiverModule, target: QuiverModule) -> int:
    """dim Ext^1(M, N) = dim Hom(M, Omega^-1 N) minus the maps lifting to the envelope of N."""
    field = source.algebra.field

    def compute():
        co, projection, mono = cosyzygy_with_projection(target)
        h = ms.hom_dim(source, co)
        if h == 0:
            return 0
        columns = [g.then(projection).flatten() for g in ms.hom(source, mono.target).basis]
        return h - (field.rank(np.column_stack(columns)) if columns else 0)

    return source.algebra.memo(("ext1_co", source.key(), target.key()), compute)


def ext_class_coordinates(ext: ExtSpace, cocycle: ModuleMorphism) -> np.ndarray:
    """Coordinates of the class of `cocycle` in the basis `ext.cocycles`."""
    field = ext.source.algebra.field
    h = ext.cocycle_space.shape[1]
    x = field.coordinates(ext.cocycle_space, cocycle.flatten().reshape(-1, 1))
    chosen = np.zeros((h, len(ext.cocycles)), dtype=np.int64)
    for k, phi in enumerate(ext.cocycles):
        chosen[:, k] = field.coordinates(ext.cocycle_space, phi.flatten().reshape(-1, 1))[:, 0]
    combined = np.hstack([ext.coboundaries, chosen])
    y = field.coordinates(combined, x)
    return y[ext.coboundaries.shape[1] :, 0]


def extension_module(ext: ExtSpace, cocycle: ModuleMorphism) -> Tuple[QuiverModule, ModuleMorphism, ModuleMorphism]:
    """Middle term of the extension 0 -> N -> E -> M -> 0 given by `cocycle`, as a pushout."""
    algebra = ext.source.algebra
    field = algebra.field
    inclusion, epi = ext.syzygy_inclusion, ext.cover
    total, (inc_target, inc_cover), _ = ms.direct_sum_maps([ext.target, epi.source])
    glue = ModuleMorphism(
        inclusion.source,
        total,
        [np.vstack([cocycle.maps[v], (-inclusion.maps[v]) % algebra.field_prime]) for v in range(algebra.vertex_count)],
        check=False,
    )
    middle, quotient_map = ms.cokernel(glue)
    into_middle = inc_target.then(quotient_map)
    onto = []
    for v in range(algebra.vertex_count):
        section = field.right_inverse(quotient_map.maps[v])
        zero_then_epi = np.hstack([field.zeros(ext.source.dims[v], ext.target.dims[v]), epi.maps[v]])
        onto.append(field.mul(zero_then_epi, section))
    out_of_middle = ModuleMorphism(middle, ext.source, onto, check=False)
    return middle, into_middle, out_of_middle


def stable_hom_dimension(source: QuiverModule, target: QuiverModule) -> int:
    """dim Hom(N, X) modulo the maps factoring through an injective module."""
    field = source.algebra.field
    h = ms.hom_dim(source, target)
    if h == 0:
        return 0
    _, mono = injective_envelope(source)
    columns = [mono.then(g).flatten() for g in ms.hom(mono.target, target).basis]
    return h - (field.rank(np.column_stack(columns)) if columns else 0)


# --- Projective and injective dimension ---

def _resolution_dimension(
    module: QuiverModule,
    step: Callable[[QuiverModule], QuiverModule],
    terminal: Callable[[QuiverModule], bool],
    cap: int,
    seed: int,
) -> HomDim:
    """Walk the indecomposable summands of successive (co)syzygies.

    A summand class met again on the current walk certifies an infinite
    dimension; walking past `cap` steps gives exceeded(cap).
    """
    representatives: List[QuiverModule] = []
    values = {}

    def locate(x: QuiverModule) -> int:
        for i, rep in enumerate(representatives):
            if ms.is_isomorphic(x, rep, seed=seed):
                return i
        representatives.append(x)
        return len(representatives) - 1

    def visit(x: QuiverModule, depth: int, on_walk: set) -> HomDim:
        i = locate(x)
        if i in on_walk:
            return HomDim.infinite()
        if i in values:
            return values[i]
        if terminal(x):
            values[i] = HomDim.finite(0)
            return values[i]
        if depth >= cap:
            return HomDim.exceeded(cap)
        on_walk.add(i)
        children = ms.indecomposable_summands(step(x), seed=seed)
        result = max_dim(visit(y, depth + 1, on_walk) for y in children).plus(1)
        on_walk.discard(i)
        if not result.is_exceeded:
            values[i] = result
        return result

    if module.is_zero:
        return HomDim.finite(0)
    return max_dim(visit(x, 0, set()) for x in ms.indecomposable_summands(module, seed=seed))


def projective_dimension(module: QuiverModule, cap: int = settings.RESOLUTION_CAP, seed: int = settings.SEED) -> HomDim:
    return _resolution_dimension(module, syzygy, is_projective, cap, seed)


def injective_dimension(module: QuiverModule, cap: int = settings.RESOLUTION_CAP, seed: int = settings.SEED) -> HomDim:
    return _resolution_dimension(module, cosyzygy, is_injective, cap, seed)


# --- Invariants of the algebra ---

def gldim(algebra: AlgebraPresentation, cap: int = settings.RESOLUTION_CAP, seed: int = settings.SEED) -> HomDim:
    """1 + max_v pd(rad P_v), cross-checked against max_v pd(S_v)."""

    def compute():
        radicals = [radical(projective_module(algebra, v))[0] for v in range(algebra.vertex_count)]
        if all(r.is_zero for r in radicals):
            value = HomDim.finite(0)
        else:
            value = max_dim(projective_dimension(r, cap, seed) for r in radicals).plus(1)
        by_simples = max_dim(projective_dimension(simple_module(algebra, v), cap, seed) for v in range(algebra.vertex_count))
        if not value.is_exceeded and not by_simples.is_exceeded and value != by_simples:
            raise CrossCheckMismatch(f"gl.dim from radicals of projectives is {value}, from simples {by_simples}")
        return value

    return algebra.memo(("gldim", cap, seed), compute)


def domdim(algebra: AlgebraPresentation, cap: int = settings.DOMDIM_CAP, seed: int = settings.SEED) -> HomDim:
    """Index of the first non-projective term of the minimal injective coresolution of Lambda."""

    def compute():
        current = regular_module(algebra)
        seen: List[QuiverModule] = []
        for n in range(cap):
            envelope, _ = injective_envelope(current)
            if not is_projective(envelope):
                return HomDim.finite(n)
            current = cosyzygy(current)
            if current.is_zero:
                return HomDim.infinite()
            if any(ms.is_isomorphic(current, earlier, seed=seed) for earlier in seen):
                return HomDim.infinite()
            seen.append(current)
        return HomDim.exceeded(cap)

    return algebra.memo(("domdim", cap, seed), compute)


def is_selfinjective(algebra: AlgebraPresentation) -> bool:
    return is_injective(regular_module(algebra))


def gorenstein_data(algebra: AlgebraPresentation, cap: int = settings.RESOLUTION_CAP, seed: int = settings.SEED) -> Tuple[HomDim, HomDim]:
    """(id of Lambda_Lambda, pd of D Lambda)."""

    def compute():
        return (
            injective_dimension(regular_module(algebra), cap, seed),
            projective_dimension(dual_regular_module(algebra), cap, seed),
        )

    return algebra.memo(("gorenstein", cap, seed), compute)


def is_gorenstein(algebra: AlgebraPresentation, cap: int = settings.RESOLUTION_CAP, seed: int = settings.SEED) -> Optional[bool]:
    """Both one-sided selfinjective dimensions finite; None when a cap was hit."""
    left, right = gorenstein_data(algebra, cap, seed)
    if left.is_exceeded or right.is_exceeded:
        return None
    return left.is_finite and right.is_finite
