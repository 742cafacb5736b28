"""Hom spaces, submodules and quotients, duality, Krull-Schmidt decomposition.

Every operation here is a pure function of immutable modules; randomised
searches take an explicit seed and build their own generator.
"""
import itertools
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import InconclusiveIso, NonSplitField
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.representation import (
    HomSpace,
    ModuleMorphism,
    QuiverModule,
    identity_morphism,
    morphism_from_flat,
    zero_module,
)

logger = get_logger(__name__)


# --- Direct sums ---

def direct_sum(algebra: AlgebraPresentation, modules: Sequence[QuiverModule]) -> QuiverModule:
    """Block-diagonal direct sum; the empty sum is the zero module."""
    if not modules:
        return zero_module(algebra)
    n = algebra.vertex_count
    dims = [sum(m.dims[v] for m in modules) for v in range(n)]
    maps = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        block = np.zeros((dims[arrow.target], dims[arrow.source]), dtype=np.int64)
        r = c = 0
        for m in modules:
            t, s = m.dims[arrow.target], m.dims[arrow.source]
            block[r : r + t, c : c + s] = m.maps[a]
            r += t
            c += s
        maps.append(block)
    return QuiverModule(algebra, dims, maps, check=False)


def direct_sum_maps(modules: Sequence[QuiverModule]) -> Tuple[QuiverModule, List[ModuleMorphism], List[ModuleMorphism]]:
    """The sum together with its canonical inclusions and projections."""
    algebra = modules[0].algebra
    total = direct_sum(algebra, modules)
    inclusions, projections = [], []
    starts = [0] * algebra.vertex_count
    for m in modules:
        inc, proj = [], []
        for v in range(algebra.vertex_count):
            e = np.zeros((total.dims[v], m.dims[v]), dtype=np.int64)
            e[starts[v] : starts[v] + m.dims[v], :] = np.eye(m.dims[v], dtype=np.int64)
            inc.append(e)
            proj.append(e.T.copy())
            starts[v] += m.dims[v]
        inclusions.append(ModuleMorphism(m, total, inc, check=False))
        projections.append(ModuleMorphism(total, m, proj, check=False))
    return total, inclusions, projections


def power(module: QuiverModule, k: int) -> QuiverModule:
    return direct_sum(module.algebra, [module] * k)


def morphism_into_sum(target: QuiverModule, maps: Sequence[ModuleMorphism]) -> ModuleMorphism:
    """(f_1, ..., f_k): M -> N_1 + ... + N_k stacked vertically; `target` is the sum."""
    source = maps[0].source
    blocks = [np.vstack([f.maps[v] for f in maps]) for v in range(len(source.dims))]
    return ModuleMorphism(source, target, blocks, check=False)


def morphism_from_sum(source: QuiverModule, maps: Sequence[ModuleMorphism]) -> ModuleMorphism:
    """[f_1 ... f_k]: N_1 + ... + N_k -> M placed side by side; `source` is the sum."""
    target = maps[0].target
    blocks = [np.hstack([f.maps[v] for f in maps]) for v in range(len(target.dims))]
    return ModuleMorphism(source, target, blocks, check=False)


# --- Sub and quotient modules ---

def submodule(module: QuiverModule, bases: Sequence[np.ndarray]) -> Tuple[QuiverModule, ModuleMorphism]:
    """Restrict to the subspaces spanned by the columns of `bases`, which must be arrow-stable."""
    field = module.algebra.field
    maps = []
    for a, arrow in enumerate(module.algebra.quiver.arrows):
        image = field.mul(module.maps[a], bases[arrow.source])
        maps.append(field.coordinates(bases[arrow.target], image))
    sub = QuiverModule(module.algebra, [b.shape[1] for b in bases], maps, check=False)
    return sub, ModuleMorphism(sub, module, bases, check=False)


def quotient(module: QuiverModule, bases: Sequence[np.ndarray]) -> Tuple[QuiverModule, ModuleMorphism]:
    """Quotient by the arrow-stable subspaces spanned by `bases`, with the canonical projection."""
    field = module.algebra.field
    projections = [field.cokernel_projection(b) for b in bases]
    sections = [field.right_inverse(q) for q in projections]
    maps = []
    for a, arrow in enumerate(module.algebra.quiver.arrows):
        maps.append(field.mul(field.mul(projections[arrow.target], module.maps[a]), sections[arrow.source]))
    quo = QuiverModule(module.algebra, [q.shape[0] for q in projections], maps, check=False)
    return quo, ModuleMorphism(module, quo, projections, check=False)


def kernel(f: ModuleMorphism) -> Tuple[QuiverModule, ModuleMorphism]:
    field = f.source.algebra.field
    return submodule(f.source, [field.kernel_basis(m) for m in f.maps])


def image(f: ModuleMorphism) -> Tuple[QuiverModule, ModuleMorphism]:
    field = f.source.algebra.field
    return submodule(f.target, [field.image_basis(m) for m in f.maps])


def cokernel(f: ModuleMorphism) -> Tuple[QuiverModule, ModuleMorphism]:
    field = f.source.algebra.field
    return quotient(f.target, [field.image_basis(m) for m in f.maps])


# --- Duality ---

def dual_module(module: QuiverModule) -> QuiverModule:
    """D M = Hom_k(M, k), a module over the opposite algebra (transposed arrow maps)."""
    opposite = module.algebra.opposite()
    return QuiverModule(opposite, module.dims, [m.T for m in module.maps], check=False)


def dual_morphism(f: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(dual_module(f.target), dual_module(f.source), [m.T for m in f.maps], check=False)


# --- Hom ---

def _hom_system(source: QuiverModule, target: QuiverModule) -> np.ndarray:
    """Linear system whose null space is Hom(source, target) in flattened coordinates."""
    algebra = source.algebra
    sizes = [s * t for s, t in zip(source.dims, target.dims)]
    col_start = np.cumsum([0] + sizes)
    blocks = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        v, w = arrow.source, arrow.target
        row = np.zeros((target.dims[w] * source.dims[v], int(col_start[-1])), dtype=np.int64)
        if row.shape[0] == 0:
            continue
        # N(a) f_v - f_w M(a) = 0, row-major vectorisation
        row[:, col_start[v] : col_start[v + 1]] += np.kron(target.maps[a], np.eye(source.dims[v], dtype=np.int64))
        row[:, col_start[w] : col_start[w + 1]] -= np.kron(np.eye(target.dims[w], dtype=np.int64), source.maps[a].T)
        blocks.append(row)
    if not blocks:
        return np.zeros((0, int(col_start[-1])), dtype=np.int64)
    return np.vstack(blocks) % algebra.field_prime


def hom_matrix(source: QuiverModule, target: QuiverModule) -> np.ndarray:
    """Columns: canonical basis of Hom(source, target) in flattened coordinates."""
    algebra = source.algebra

    def compute():
        basis = algebra.field.kernel_basis(_hom_system(source, target))
        basis.setflags(write=False)
        return basis

    return algebra.memo(("hom", source.key(), target.key()), compute)


def hom(source: QuiverModule, target: QuiverModule) -> HomSpace:
    def compute():
        matrix = hom_matrix(source, target)
        basis = [morphism_from_flat(source, target, matrix[:, j]) for j in range(matrix.shape[1])]
        return HomSpace(source=source, target=target, matrix=matrix, basis=basis)

    return source.algebra.memo(("hom_space", source.key(), target.key()), compute)


def hom_dim(source: QuiverModule, target: QuiverModule) -> int:
    return hom_matrix(source, target).shape[1]


def end_dim(module: QuiverModule) -> int:
    return hom_dim(module, module)


def coordinates_in_hom(space: HomSpace, f: ModuleMorphism) -> Optional[np.ndarray]:
    field = space.source.algebra.field
    x = field.solve(space.matrix, f.flatten().reshape(-1, 1))
    return None if x is None else x[:, 0]


# --- Cheap invariants ---

def top_dims(module: QuiverModule) -> Tuple[int, ...]:
    """dim of (M / rad M) at each vertex; rad M is the sum of the arrow images."""
    field = module.algebra.field

    def compute():
        out = []
        for v in range(len(module.dims)):
            incoming = [module.maps[a] for a, arrow in enumerate(module.algebra.quiver.arrows) if arrow.target == v]
            r = field.rank(np.hstack(incoming)) if incoming and module.dims[v] else 0
            out.append(module.dims[v] - r)
        return tuple(out)

    return module.algebra.memo(("top", module.key()), compute)


def socle_dims(module: QuiverModule) -> Tuple[int, ...]:
    """dim of the joint kernel of the arrow maps leaving each vertex."""
    field = module.algebra.field

    def compute():
        out = []
        for v in range(len(module.dims)):
            outgoing = [module.maps[a] for a, arrow in enumerate(module.algebra.quiver.arrows) if arrow.source == v]
            r = field.rank(np.vstack(outgoing)) if outgoing and module.dims[v] else 0
            out.append(module.dims[v] - r)
        return tuple(out)

    return module.algebra.memo(("socle", module.key()), compute)


def fingerprint(module: QuiverModule) -> Tuple:
    return (module.dims, top_dims(module), socle_dims(module), end_dim(module))


def canonical_key(module: QuiverModule) -> Tuple:
    return (module.dim, module.dims, fingerprint(module))


def is_sincere(module: QuiverModule) -> bool:
    return all(d >= 1 for d in module.dims)


# --- Gen / Cogen ---

def in_cogen(module: QuiverModule, cogenerator: QuiverModule) -> bool:
    """The evaluation map M -> T^hom(M,T) is injective."""
    space = hom(module, cogenerator)
    field = module.algebra.field
    for v, d in enumerate(module.dims):
        if d == 0:
            continue
        if not space.basis:
            return False
        if field.rank(np.vstack([f.maps[v] for f in space.basis])) < d:
            return False
    return True


def in_gen(module: QuiverModule, generator: QuiverModule) -> bool:
    """The trace of T in M is all of M."""
    space = hom(generator, module)
    field = module.algebra.field
    for v, d in enumerate(module.dims):
        if d == 0:
            continue
        if not space.basis:
            return False
        if field.rank(np.hstack([f.maps[v] for f in space.basis])) < d:
            return False
    return True


def cogen_embedding(module: QuiverModule, cogenerator: QuiverModule) -> Optional[ModuleMorphism]:
    """An explicit monomorphism M -> T^d, or None when M is not cogenerated by T."""
    space = hom(module, cogenerator)
    if not space.basis:
        return None if module.dim else ModuleMorphism(module, zero_module(module.algebra), [np.zeros((0, d), dtype=np.int64) for d in module.dims])
    f = morphism_into_sum(power(cogenerator, len(space.basis)), space.basis)
    return f if f.is_injective() else None


def gen_epimorphism(module: QuiverModule, generator: QuiverModule) -> Optional[ModuleMorphism]:
    """An explicit epimorphism T^d -> M, or None when M is not generated by T."""
    space = hom(generator, module)
    if not space.basis:
        return None if module.dim else ModuleMorphism(zero_module(module.algebra), module, [np.zeros((d, 0), dtype=np.int64) for d in module.dims])
    f = morphism_from_sum(power(generator, len(space.basis)), space.basis)
    return f if f.is_surjective() else None


# --- Endomorphism structure ---

def _krylov_polynomial(field, matrix: np.ndarray, vector: np.ndarray) -> List[int]:
    """Minimal polynomial of `vector` under `matrix`, constant term first."""
    n = matrix.shape[0]
    vectors = [vector.reshape(-1, 1) % field.p]
    while len(vectors) <= n:
        nxt = field.mul(matrix, vectors[-1])
        basis = np.hstack(vectors)
        coeffs = field.solve(basis, nxt)
        if coeffs is not None:
            return [(-int(c)) % field.p for c in coeffs[:, 0]] + [1]
        vectors.append(nxt)
    raise AssertionError("Krylov sequence exceeded the dimension")


def _eigenvalues(f: ModuleMorphism, rng: np.random.Generator) -> List[int]:
    field = f.source.algebra.field
    total = f.total_matrix()
    v = field.random_matrix(rng, total.shape[0], 1)
    if not np.any(v):
        v[0, 0] = 1
    return field.roots(_krylov_polynomial(field, total, v))


def _shifted_power(f: ModuleMorphism, eigenvalue: int) -> ModuleMorphism:
    field = f.source.algebra.field
    maps = []
    for m in f.maps:
        n = m.shape[0]
        maps.append(field.power(field.sub(m, field.scale(eigenvalue, field.identity(n))), n))
    return ModuleMorphism(f.source, f.source, maps, check=False)


def _fitting_split(f: ModuleMorphism, rng: np.random.Generator) -> Optional[Tuple[QuiverModule, QuiverModule]]:
    """Split M = ker (f - l)^n + im (f - l)^n when that is a proper decomposition."""
    for eigenvalue in _eigenvalues(f, rng):
        g = _shifted_power(f, eigenvalue)
        if g.is_zero:
            continue
        ker, _ = kernel(g)
        if ker.is_zero:
            continue
        img, _ = image(g)
        return ker, img
    return None


def _nilpotent_shift(f: ModuleMorphism, rng: np.random.Generator) -> Optional[np.ndarray]:
    """f - l.1 as a total matrix when f has the single eigenvalue l, else None."""
    field = f.source.algebra.field
    total = f.total_matrix()
    n = total.shape[0]
    roots = _eigenvalues(f, rng)
    if len(roots) != 1:
        return None
    shifted = field.sub(total, field.scale(roots[0], field.identity(n)))
    if np.any(field.power(shifted, n)):
        return None
    return shifted


def _generates_nilpotent_algebra(field, generators: List[np.ndarray], n: int) -> bool:
    if not generators:
        return True
    current = [g for g in generators if np.any(g)]
    for _ in range(n + 1):
        if not current:
            return True
        products = [field.mul(w, g) for w in current for g in generators]
        products = [m for m in products if np.any(m)]
        if not products:
            return True
        R, pivots = field.rref(np.vstack([m.reshape(1, -1) for m in products]))
        current = [R[i].reshape(n, n) for i in range(len(pivots))]
    return False


def is_local(module: QuiverModule, seed: int = settings.SEED) -> bool:
    """End(M) is local with residue field F_p: each basis element shifted by its
    eigenvalue is nilpotent and the shifts generate a nilpotent algebra."""
    if module.is_zero:
        return False
    space = hom(module, module)
    if space.dimension == 1:
        return True
    rng = np.random.default_rng(seed)
    field = module.algebra.field
    shifts = []
    for f in space.basis:
        s = _nilpotent_shift(f, rng)
        if s is None:
            return False
        shifts.append(s)
    return _generates_nilpotent_algebra(field, shifts, module.dim)


def _split(module: QuiverModule, rng: np.random.Generator, budget: int) -> List[QuiverModule]:
    if module.is_zero:
        return []
    space = hom(module, module)
    if space.dimension == 1 or is_local(module, seed=int(rng.integers(0, 2**31))):
        return [module]
    field = module.algebra.field
    candidates = iter(space.basis)
    for _ in range(len(space.basis) + budget):
        f = next(candidates, None)
        if f is None:
            f = space.combination(field.random_matrix(rng, space.dimension, 1)[:, 0])
        parts = _fitting_split(f, rng)
        if parts is not None:
            left, right = parts
            return _split(left, rng, budget) + _split(right, rng, budget)
    raise NonSplitField(f"no splitting endomorphism found for a module of dimension vector {module.dims} and its endomorphism ring is not split local")


def decompose(module: QuiverModule, seed: int = settings.SEED, budget: int = settings.RETRY_BUDGET) -> List[Tuple[QuiverModule, int]]:
    """Indecomposable summands with multiplicities, in canonical order."""
    rng = np.random.default_rng(seed)
    pieces = _split(module, rng, budget)
    classes: List[List] = []
    for piece in pieces:
        for entry in classes:
            if is_isomorphic(entry[0], piece, seed=seed):
                entry[1] += 1
                break
        else:
            classes.append([piece, 1])
    classes.sort(key=lambda entry: canonical_key(entry[0]))
    return [(m, k) for m, k in classes]


def indecomposable_summands(module: QuiverModule, seed: int = settings.SEED) -> List[QuiverModule]:
    return [m for m, _ in decompose(module, seed=seed)]


def is_indecomposable(module: QuiverModule, seed: int = settings.SEED) -> bool:
    return not module.is_zero and is_local(module, seed=seed)


def basic_module(module: QuiverModule, seed: int = settings.SEED) -> QuiverModule:
    """One copy of each indecomposable summand."""
    return direct_sum(module.algebra, indecomposable_summands(module, seed=seed))


# --- Isomorphism ---

def _is_invertible(f: ModuleMorphism) -> bool:
    field = f.source.algebra.field
    return all(field.rank(m) == m.shape[0] == m.shape[1] for m in f.maps)


def _local_isomorphic(left: QuiverModule, right: QuiverModule) -> bool:
    """For local `left`: some basis composite g.f lies outside rad End(left)."""
    there, back = hom(left, right), hom(right, left)
    for f in there.basis:
        for g in back.basis:
            if _is_invertible(f.then(g)):
                return True
    return False


def is_isomorphic(
    left: QuiverModule,
    right: QuiverModule,
    seed: int = settings.SEED,
    budget: int = settings.RETRY_BUDGET,
    exhaustive_limit: int = settings.ISO_EXHAUSTIVE_LIMIT,
) -> bool:
    if left.dims != right.dims:
        return False
    if left.is_zero:
        return True
    if top_dims(left) != top_dims(right) or socle_dims(left) != socle_dims(right):
        return False
    space = hom(left, right)
    if space.dimension != end_dim(left) or end_dim(left) != end_dim(right):
        return False
    for f in space.basis:
        if _is_invertible(f):
            return True
    rng = np.random.default_rng(seed)
    field = left.algebra.field
    for _ in range(budget):
        if _is_invertible(space.combination(field.random_matrix(rng, space.dimension, 1)[:, 0])):
            return True
    p = left.algebra.field_prime
    if p ** space.dimension <= exhaustive_limit:
        for coeffs in itertools.product(range(p), repeat=space.dimension):
            if _is_invertible(space.combination(coeffs)):
                return True
        return False
    try:
        if is_local(left, seed=seed):
            return _local_isomorphic(left, right)
        left_parts = decompose(left, seed=seed)
        right_parts = decompose(right, seed=seed)
    except NonSplitField as exc:
        raise InconclusiveIso(f"isomorphism undecided for dimension vector {left.dims}: {exc}") from exc
    if len(left_parts) != len(right_parts):
        return False
    unmatched = list(right_parts)
    for module, mult in left_parts:
        for i, (other, other_mult) in enumerate(unmatched):
            if other_mult == mult and other.dims == module.dims and _local_isomorphic(module, other):
                unmatched.pop(i)
                break
        else:
            return False
    return True


def index_in(module: QuiverModule, modules: Sequence[QuiverModule], seed: int = settings.SEED) -> Optional[int]:
    for i, other in enumerate(modules):
        if other.key() == module.key():
            return i
    for i, other in enumerate(modules):
        if is_isomorphic(module, other, seed=seed):
            return i
    return None


def identity(module: QuiverModule) -> ModuleMorphism:
    return identity_morphism(module)


def endomorphism_radical(module: QuiverModule, seed: int = settings.SEED) -> List[ModuleMorphism]:
    """A basis of rad End(M) for local M: the basis elements minus their eigenvalues."""
    space = hom(module, module)
    field = module.algebra.field
    rng = np.random.default_rng(seed)
    shifts = []
    for f in space.basis:
        for eigenvalue in _eigenvalues(f, rng):
            g = f - identity_morphism(module).scaled(eigenvalue)
            if _shifted_power(g, 0).is_zero:
                shifts.append(g)
                break
        else:
            raise NonSplitField(f"endomorphism of {module.dims} has no eigenvalue in F_{field.p} with nilpotent remainder")
    if not shifts:
        return []
    R, pivots = field.rref(np.vstack([g.flatten() for g in shifts]))
    return [morphism_from_flat(module, module, R[i]) for i in range(len(pivots))]
