"""Tilting and cotilting modules, the subcategory C, T_C / C_C and induced torsion pairs."""
from typing import List, Optional, Sequence

import numpy as np

from app.core.config import settings
from app.core.errors import CrossCheckMismatch, Inconclusive
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.catalog import IndCatalog
from app.models.homdim import HomDim, max_dim
from app.models.representation import ModuleMorphism, QuiverModule, zero_module
from app.models.tilting import TiltingReport, TorsionPairData
from app.services import homology_service as hs
from app.services import module_service as ms
from app.services.ar_service import tau, tau_inv
from app.services.algebra_service import injective_module, projective_module, projectives

logger = get_logger(__name__)


# --- Q~, C_Lambda, T_C and C_C ---

def projective_injectives(algebra: AlgebraPresentation) -> QuiverModule:
    """Sum of the indecomposable projective-injectives, each once."""
    return ms.direct_sum(algebra, [p for p in projectives(algebra) if hs.is_injective(p)])


def in_C_lambda(module: QuiverModule) -> bool:
    q = projective_injectives(module.algebra)
    return ms.in_gen(module, q) and ms.in_cogen(module, q)


def construct_tc(algebra: AlgebraPresentation, seed: int = settings.SEED) -> QuiverModule:
    """Q~ plus the cosyzygies of the projective non-injectives, multiplicity free."""

    def compute():
        parts = [projective_injectives(algebra)]
        for v in range(algebra.vertex_count):
            p = projective_module(algebra, v)
            if not hs.is_injective(p):
                parts.append(hs.cosyzygy(p))
        return ms.basic_module(ms.direct_sum(algebra, parts), seed=seed)

    return algebra.memo(("T_C", seed), compute)


def construct_cc(algebra: AlgebraPresentation, seed: int = settings.SEED) -> QuiverModule:
    """Q~ plus the syzygies of the injective non-projectives, multiplicity free."""

    def compute():
        parts = [projective_injectives(algebra)]
        for v in range(algebra.vertex_count):
            i = injective_module(algebra, v)
            if not hs.is_projective(i):
                parts.append(hs.syzygy(i))
        return ms.basic_module(ms.direct_sum(algebra, parts), seed=seed)

    return algebra.memo(("C_C", seed), compute)


# --- Tilting test ---

def in_add(module: QuiverModule, summands: Sequence[QuiverModule], seed: int = settings.SEED) -> bool:
    """Every indecomposable summand of `module` is isomorphic to one of `summands`."""
    if module.is_zero:
        return True
    return all(ms.index_in(x, summands, seed=seed) is not None for x in ms.indecomposable_summands(module, seed=seed))


def _resolved(value: HomDim, what: str) -> bool:
    verdict = value.at_most(1)
    if verdict is None:
        raise Inconclusive(f"{what} {value}: resolution cap reached")
    return verdict


def _left_approximation(source: QuiverModule, basic: QuiverModule) -> ModuleMorphism:
    """The universal map source -> basic^h built from a basis of Hom(source, basic)."""
    space = ms.hom(source, basic)
    if not space.basis:
        empty = [np.zeros((0, d), dtype=np.int64) for d in source.dims]
        return ModuleMorphism(source, zero_module(source.algebra), empty, check=False)
    return ms.morphism_into_sum(ms.power(basic, space.dimension), space.basis)


def _right_approximation(target: QuiverModule, basic: QuiverModule) -> ModuleMorphism:
    """The universal map basic^h -> target built from a basis of Hom(basic, target)."""
    space = ms.hom(basic, target)
    if not space.basis:
        empty = [np.zeros((d, 0), dtype=np.int64) for d in target.dims]
        return ModuleMorphism(zero_module(target.algebra), target, empty, check=False)
    return ms.morphism_from_sum(ms.power(basic, space.dimension), space.basis)



def check_tilting(
    module: QuiverModule,
    cap: int = settings.RESOLUTION_CAP,
    seed: int = settings.SEED,
) -> TiltingReport:
    """Both halves of the (co)tilting definition, each cross-checked by the summand count."""
    algebra = module.algebra
    summands = ms.indecomposable_summands(module, seed=seed)
    n = algebra.vertex_count
    basic = ms.direct_sum(algebra, summands)
    self_orthogonal = all(hs.ext1_dim(x, y) == 0 for x in summands for y in summands)

    pd_ok = _resolved(max_dim(hs.projective_dimension(x, cap, seed) for x in summands), "pd T =")
    partial_tilting = pd_ok and self_orthogonal
    witnesses: List[ModuleMorphism] = []
    constructive = partial_tilting
    if partial_tilting:
        for v in range(n):
            f = _left_approximation(projective_module(algebra, v), basic)
            witnesses.append(f)
            if not f.is_injective() or not in_add(ms.cokernel(f)[0], summands, seed=seed):
                constructive = False
                break
    by_count = partial_tilting and len(summands) == n
    if constructive != by_count:
        raise CrossCheckMismatch(f"tilting by approximation is {constructive}, by summand count {by_count}")

    id_ok = _resolved(max_dim(hs.injective_dimension(x, cap, seed) for x in summands), "id T =")
    partial_cotilting = id_ok and self_orthogonal
    cowitnesses: List[ModuleMorphism] = []
    co_constructive = partial_cotilting
    if partial_cotilting:
        for v in range(n):
            g = _right_approximation(injective_module(algebra, v), basic)
            cowitnesses.append(g)
            if not g.is_surjective() or not in_add(ms.kernel(g)[0], summands, seed=seed):
                co_constructive = False
                break
    co_by_count = partial_cotilting and len(summands) == n
    if co_constructive != co_by_count:
        raise CrossCheckMismatch(f"cotilting by approximation is {co_constructive}, by summand count {co_by_count}")

    return TiltingReport(
        module=module,
        is_partial_tilting=partial_tilting,
        is_tilting=constructive,
        is_partial_cotilting=partial_cotilting,
        is_cotilting=co_constructive,
        summand_count=len(summands),
        witness_sequences=witnesses,
        cowitness_sequences=cowitnesses,
    )


# --- Torsion pairs ---

def _ext_from(modules: Sequence[QuiverModule], target: QuiverModule) -> int:
    return sum(hs.ext1_dim(x, target) for x in modules)


def _ext_into(source: QuiverModule, modules: Sequence[QuiverModule]) -> int:
    return sum(hs.ext1_dim(source, y) for y in modules)


def _assert_torsion_axioms(catalog: IndCatalog, torsion: List[int], free: List[int]) -> None:
    for t in torsion:
        for f in free:
            if catalog.hom_dims[t, f]:
                raise CrossCheckMismatch(f"Hom(X_{t}, X_{f}) is nonzero across the torsion pair")
    for i in range(catalog.size):
        if i not in torsion and all(catalog.hom_dims[i, f] == 0 for f in free):
            raise CrossCheckMismatch(f"X_{i} is Hom-orthogonal to the torsion-free class but not torsion")
        if i not in free and all(catalog.hom_dims[t, i] == 0 for t in torsion):
            raise CrossCheckMismatch(f"X_{i} is Hom-orthogonal to the torsion class but not torsion-free")


def torsion_pair_of_tilting(module: QuiverModule, catalog: IndCatalog, seed: int = settings.SEED) -> TorsionPairData:
    """T(T) = {Ext^1(T, X) = 0} and F(T) = {Hom(T, X) = 0}, checked against Gen T and Cogen(tau T)."""
    summands = ms.indecomposable_summands(module, seed=seed)
    translate = tau(module)
    torsion, free = [], []
    for i, x in enumerate(catalog.modules):
        in_torsion = _ext_from(summands, x) == 0
        in_free = ms.hom_dim(module, x) == 0
        if in_torsion != ms.in_gen(x, module):
            raise CrossCheckMismatch(f"X_{i}: Ext^1(T, X) = 0 is {in_torsion} but membership in Gen T disagrees")
        if in_free != ms.in_cogen(x, translate):
            raise CrossCheckMismatch(f"X_{i}: Hom(T, X) = 0 is {in_free} but membership in Cogen(tau T) disagrees")
        if in_torsion:
            torsion.append(i)
        if in_free:
            free.append(i)
    _assert_torsion_axioms(catalog, torsion, free)
    return TorsionPairData(
        tilter=module,
        torsion_indices=torsion,
        torsionfree_indices=free,
        splitting=len(torsion) + len(free) == catalog.size,
        catalog_size=catalog.size,
    )


def torsion_pair_of_cotilting(module: QuiverModule, catalog: IndCatalog, seed: int = settings.SEED) -> TorsionPairData:
    """F(C) = {Ext^1(X, C) = 0} = Cogen C and T(C) = {Hom(X, C) = 0} = Gen(tau^-1 C)."""
    summands = ms.indecomposable_summands(module, seed=seed)
    translate = tau_inv(module)
    torsion, free = [], []
    for i, x in enumerate(catalog.modules):
        in_free = _ext_into(x, summands) == 0
        in_torsion = ms.hom_dim(x, module) == 0
        if in_free != ms.in_cogen(x, module):
            raise CrossCheckMismatch(f"X_{i}: Ext^1(X, C) = 0 is {in_free} but membership in Cogen C disagrees")
        if in_torsion != ms.in_gen(x, translate):
            raise CrossCheckMismatch(f"X_{i}: Hom(X, C) = 0 is {in_torsion} but membership in Gen(tau^-1 C) disagrees")
        if in_torsion:
            torsion.append(i)
        if in_free:
            free.append(i)
    _assert_torsion_axioms(catalog, torsion, free)
    return TorsionPairData(
        tilter=module,
        torsion_indices=torsion,
        torsionfree_indices=free,
        splitting=len(torsion) + len(free) == catalog.size,
        catalog_size=catalog.size,
    )


def ext_projectives_of_torsion_class(
    module: QuiverModule, catalog: IndCatalog, pair: Optional[TorsionPairData] = None, seed: int = settings.SEED
) -> List[int]:
    """Ext-projectives of T(T), directly and by the tau criterion; both must be the summands of T."""
    if pair is None:
        pair = torsion_pair_of_tilting(module, catalog, seed=seed)
    torsion = pair.torsion_indices
    free = set(pair.torsionfree_indices)
    direct = [
        i for i in torsion
        if all(hs.ext1_dim(catalog.modules[i], catalog.modules[j]) == 0 for j in torsion)
    ]
    by_tau = [i for i in torsion if catalog.projective[i] or catalog.tau_index.get(i) in free]
    if direct != by_tau:
        raise CrossCheckMismatch(f"Ext-projectives directly {direct}, by the tau criterion {by_tau}")
    summand_indices = sorted(catalog.index_of(x) for x in ms.indecomposable_summands(module, seed=seed))
    if direct != summand_indices:
        raise CrossCheckMismatch(f"Ext-projectives {direct} differ from the summands of T {summand_indices}")
    return direct
