"""Decision procedures for the 1-Auslander-Gorenstein / tilted characterisations and the check suite.

A `TheoremSession` computes each invariant of one algebra at most once; every
check reads from it and returns a `CheckResult`. Checks whose hypotheses do
not hold report `vacuous`, never `pass`.
"""
import time
from functools import cached_property
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from app.core.config import RunCaps, settings
from app.core.errors import CrossCheckMismatch, Inconclusive, SearchInfeasible, ValidationFailed
from app.core.logger import get_logger
from app.models.algebra import AlgebraPresentation
from app.models.catalog import IndCatalog
from app.models.homdim import HomDim, max_dim
from app.models.schemas import AlgebraSummary, AlgebraVerdict, CheckResult, CheckStatus, SuiteReport
from app.models.tilting import TiltingReport
from app.services import homology_service as hs
from app.services import module_service as ms
from app.services import tilting_service as ts
from app.services.algebra_service import dual_regular_module, injectives, projectives, regular_module
from app.services.ar_service import (
    ar_sequence,
    enumerate_indecomposables,
    predecessors,
    tau,
    tau_inv,
    validate_ar_sequence,
)

logger = get_logger(__name__)

Outcome = Tuple[CheckStatus, List[str]]


def _at_least_two(d: HomDim) -> bool:
    # exceeded(cap) means the first `cap` terms were all projective
    if d.is_exceeded:
        return d.value >= 2
    return bool(d.at_least(2))


def _known(answer: Optional[bool], what: str) -> bool:
    if answer is None:
        raise Inconclusive(f"{what}: resolution cap reached")
    return answer


class TheoremSession:
    """Invariants of one algebra, computed lazily and shared by all checks."""

    def __init__(self, algebra: AlgebraPresentation, caps: RunCaps = RunCaps()):
        self.algebra = algebra
        self.caps = caps
        self._catalog: Optional[IndCatalog] = None
        self._catalog_error: Optional[Inconclusive] = None

    # --- Homological invariants ---

    @cached_property
    def gldim(self) -> HomDim:
        return hs.gldim(self.algebra, self.caps.resolution, self.caps.seed)

    @cached_property
    def domdim(self) -> HomDim:
        return hs.domdim(self.algebra, seed=self.caps.seed)

    @cached_property
    def gorenstein(self) -> Tuple[HomDim, HomDim]:
        return hs.gorenstein_data(self.algebra, self.caps.resolution, self.caps.seed)

    @cached_property
    def selfinjective(self) -> bool:
        return hs.is_selfinjective(self.algebra)

    @cached_property
    def tc(self):
        return ts.construct_tc(self.algebra, seed=self.caps.seed)

    @cached_property
    def cc(self):
        return ts.construct_cc(self.algebra, seed=self.caps.seed)

    @cached_property
    def tc_report(self) -> TiltingReport:
        return ts.check_tilting(self.tc, self.caps.resolution, self.caps.seed)

    @cached_property
    def cc_report(self) -> TiltingReport:
        return ts.check_tilting(self.cc, self.caps.resolution, self.caps.seed)

    @cached_property
    def tc_in_c(self) -> bool:
        return all(ts.in_C_lambda(x) for x in ms.indecomposable_summands(self.tc, seed=self.caps.seed))

    @cached_property
    def cc_in_c(self) -> bool:
        return all(ts.in_C_lambda(x) for x in ms.indecomposable_summands(self.cc, seed=self.caps.seed))

    @property
    def tc_tilting_cotilting_in_c(self) -> bool:
        return self.tc_report.is_tilting and self.tc_report.is_cotilting and self.tc_in_c

    @property
    def catalog(self) -> IndCatalog:
        """The catalog of indecomposables; a failed enumeration is remembered and re-raised."""
        if self._catalog_error is not None:
            raise self._catalog_error
        if self._catalog is None:
            try:
                self._catalog = enumerate_indecomposables(self.algebra, self.caps)
            except Inconclusive as exc:
                self._catalog_error = exc
                raise
        return self._catalog

    # --- Characterisations ---

    def is_1ag(self) -> bool:
        """id of the regular module <= 2 <= domdim, cross-checked by T_C being tilting-cotilting in C."""
        injective_dim, _ = self.gorenstein
        by_definition = _known(injective_dim.at_most(2), f"id = {injective_dim}") and _at_least_two(self.domdim)
        by_tilting = self.tc_tilting_cotilting_in_c
        if by_definition != by_tilting:
            raise CrossCheckMismatch(
                f"1-AG by dimensions is {by_definition}, by a tilting-cotilting T_C in C is {by_tilting}"
            )
        return by_definition

    def is_auslander(self) -> bool:
        """gl.dim <= 2 <= domdim, cross-checked against T_C when gl.dim is finite."""
        answer = _known(self.gldim.at_most(2), f"gl.dim = {self.gldim}") and _at_least_two(self.domdim)
        if self.gldim.is_finite and answer != self.tc_tilting_cotilting_in_c:
            raise CrossCheckMismatch(
                f"Auslander by dimensions is {answer}, by a tilting-cotilting T_C in C is {self.tc_tilting_cotilting_in_c}"
            )
        return answer

    # --- Catalog index sets ---

    def pd(self, i: int) -> HomDim:
        return self.catalog.pd_table[i]

    def id(self, i: int) -> HomDim:
        return self.catalog.id_table[i]

    def _require_resolved(self, table: List[HomDim], what: str) -> None:
        for i, d in enumerate(table):
            if d.is_exceeded:
                raise Inconclusive(f"{what} of X_{i} is {d}")

    @cached_property
    def p1_set(self) -> List[int]:
        self._require_resolved(self.catalog.pd_table, "pd")
        return [i for i, d in enumerate(self.catalog.pd_table) if d.at_most(1)]

    @cached_property
    def left_part(self) -> List[int]:
        """Computed by predecessor closure and by Hom-vanishing from pd >= 2; both must agree."""
        catalog = self.catalog
        p1 = set(self.p1_set)
        by_predecessors = [j for j in range(catalog.size) if predecessors(catalog, j) <= p1]
        large = [i for i in range(catalog.size) if i not in p1]
        by_hom = [j for j in range(catalog.size) if all(catalog.hom_dims[i, j] == 0 for i in large)]
        if by_predecessors != by_hom:
            raise CrossCheckMismatch(f"left part by predecessors {by_predecessors}, by Hom-vanishing {by_hom}")
        return by_predecessors

    @cached_property
    def cogen_tc_set(self) -> List[int]:
        return [i for i, x in enumerate(self.catalog.modules) if ms.in_cogen(x, self.tc)]

    @cached_property
    def ext_dims(self) -> np.ndarray:
        modules = self.catalog.modules
        return np.array([[hs.ext1_dim(x, y) for y in modules] for x in modules], dtype=np.int64).reshape(len(modules), len(modules))

    # --- Tiltedness oracle ---

    @cached_property
    def tilted_witness(self) -> Optional[List[int]]:
        """Indices of a sincere M with Hom(M, tau X) = 0 or Hom(X, M) = 0 for all X; None if tilted fails."""
        if not _known(self.gldim.at_most(2), f"gl.dim = {self.gldim}"):
            return None
        catalog = self.catalog
        if catalog.size > settings.JMS_SEARCH_LIMIT:
            raise SearchInfeasible(f"tiltedness search over {catalog.size} indecomposables exceeds {settings.JMS_SEARCH_LIMIT}")
        return _sincere_search(catalog)

    def is_tilted(self) -> bool:
        return self.tilted_witness is not None


def _sincere_search(catalog: IndCatalog) -> Optional[List[int]]:
    """Exhaustive branch-and-bound over subsets S of the catalog, as bitmasks."""
    n = catalog.size
    full = (1 << catalog.algebra.vertex_count) - 1
    a_mask, b_mask, support = [], [], []
    for x in range(n):
        t = catalog.tau_index.get(x)
        a_mask.append(0 if t is None else sum(1 << s for s in range(n) if catalog.hom_dims[s, t]))
        b_mask.append(sum(1 << s for s in range(n) if catalog.hom_dims[x, s]))
        support.append(sum(1 << v for v, d in enumerate(catalog.modules[x].dims) if d))
    reachable = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        reachable[k] = reachable[k + 1] | support[k]

    def admissible(chosen: int) -> bool:
        return all(not (chosen & a_mask[x]) or not (chosen & b_mask[x]) for x in range(n))

    def extend(k: int, chosen: int, covered: int) -> Optional[int]:
        if covered == full:
            return chosen
        if k == n or (covered | reachable[k]) != full:
            return None
        grown = chosen | (1 << k)
        if admissible(grown):
            found = extend(k + 1, grown, covered | support[k])
            if found is not None:
                return found
        return extend(k + 1, chosen, covered)

    found = extend(0, 0, 0)
    if found is None:
        return None
    return [s for s in range(n) if found >> s & 1]


# --- Verdict ---

def summarize(session: TheoremSession) -> AlgebraSummary:
    algebra = session.algebra
    injective_dim, projective_dim = session.gorenstein
    gorenstein = None
    if not (injective_dim.is_exceeded or projective_dim.is_exceeded):
        gorenstein = injective_dim.is_finite and projective_dim.is_finite
    return AlgebraSummary(
        name=algebra.name,
        prime=algebra.field_prime,
        vertices=algebra.vertex_count,
        arrows=algebra.arrow_count,
        dimension=algebra.dim,
        gldim=str(session.gldim),
        domdim=str(session.domdim),
        id_regular=str(injective_dim),
        pd_dual=str(projective_dim),
        selfinjective=session.selfinjective,
        gorenstein=gorenstein,
    )


def check_main_theorem(session: TheoremSession) -> AlgebraVerdict:
    """Tilted (by the sincere-module oracle) against add L = Cogen T_C, on 1-AG algebras."""
    summary = summarize(session)
    verdict = AlgebraVerdict(
        algebra=session.algebra.name,
        is_selfinjective=summary.selfinjective,
        is_gorenstein=summary.gorenstein,
        is_1ag=session.is_1ag(),
        is_auslander=session.is_auslander(),
    )
    try:
        verdict.left_part = session.left_part
        verdict.cogen_tc = session.cogen_tc_set
        verdict.p1_class = session.p1_set
        verdict.is_tilted = session.is_tilted()
        if session.tilted_witness is not None:
            verdict.detail.append(f"sincere witness: {session.tilted_witness}")
    except Inconclusive as exc:
        verdict.status = CheckStatus.INCONCLUSIVE
        verdict.detail.append(f"catalog-dependent parts skipped: {exc}")
        return verdict
    if not verdict.is_1ag:
        verdict.detail.append("not 1-Auslander-Gorenstein: main theorem inapplicable")
        return verdict
    verdict.main_theorem_lhs = verdict.is_tilted
    verdict.main_theorem_rhs = verdict.left_part == verdict.cogen_tc
    verdict.main_theorem_consistent = verdict.main_theorem_lhs == verdict.main_theorem_rhs
    if not verdict.main_theorem_consistent:
        verdict.status = CheckStatus.FAIL
    return verdict


def theorem_verdict(session: TheoremSession) -> AlgebraVerdict:
    """check_main_theorem, with a cross-check mismatch reported as fail and a hit cap as inconclusive."""
    try:
        return check_main_theorem(session)
    except (CrossCheckMismatch, Inconclusive) as exc:
        status = CheckStatus.FAIL if isinstance(exc, CrossCheckMismatch) else CheckStatus.INCONCLUSIVE
        logger.warning(f"❌ {session.algebra.name}: verdict {status.value}: {exc}")
        return AlgebraVerdict(
            algebra=session.algebra.name,
            status=status,
            is_selfinjective=session.selfinjective,
            detail=[f"verdict {status.value}: {type(exc).__name__}: {exc}"],
        )


# --- Checks ---

def _passed(*evidence: str) -> Outcome:
    return CheckStatus.PASS, list(evidence)


def _vacuous(reason: str) -> Outcome:
    return CheckStatus.VACUOUS, [reason]


def _verdict(ok: bool, failures: List[str], *evidence: str) -> Outcome:
    if ok:
        return CheckStatus.PASS, list(evidence)
    return CheckStatus.FAIL, failures[:20]


def check_one_ag(s: TheoremSession) -> Outcome:
    value = s.is_1ag()
    injective_dim, _ = s.gorenstein
    return _passed(f"1-AG = {value}", f"id = {injective_dim}", f"domdim = {s.domdim}")


def check_auslander(s: TheoremSession) -> Outcome:
    return _passed(f"Auslander = {s.is_auslander()}", f"gl.dim = {s.gldim}", f"domdim = {s.domdim}")


def check_main(s: TheoremSession) -> Outcome:
    if not s.is_1ag():
        return _vacuous("not 1-Auslander-Gorenstein")
    lhs, rhs = s.is_tilted(), s.left_part == s.cogen_tc_set
    evidence = [f"tilted = {lhs}", f"left part = {s.left_part}", f"Cogen T_C = {s.cogen_tc_set}"]
    return (CheckStatus.PASS if lhs == rhs else CheckStatus.FAIL), evidence


def check_main_implication(s: TheoremSession) -> Outcome:
    if not s.is_1ag():
        return _vacuous("not 1-Auslander-Gorenstein")
    rhs, tilted = s.left_part == s.cogen_tc_set, s.is_tilted()
    if not (rhs or tilted):
        return _vacuous("neither side of the main theorem holds")
    auslander = s.is_auslander()
    return _verdict(auslander, [f"rhs = {rhs}, tilted = {tilted} but not Auslander"], "Auslander algebra as implied")


def check_prop_easy1(s: TheoremSession) -> Outcome:
    if not s.is_1ag():
        return _vacuous("not 1-Auslander-Gorenstein")
    missing = sorted(set(s.p1_set) - set(s.cogen_tc_set))
    return _verdict(not missing, [f"pd <= 1 but not cogenerated by T_C: X_{i}" for i in missing], f"P1 = {s.p1_set}")


def check_prop_easy2(s: TheoremSession) -> Outcome:
    if not s.is_1ag():
        return _vacuous("not 1-Auslander-Gorenstein")
    auslander, equal = s.is_auslander(), s.p1_set == s.cogen_tc_set
    return _verdict(
        auslander == equal,
        [f"Auslander = {auslander} but (P1 == Cogen T_C) = {equal}"],
        f"Auslander = {auslander}",
        f"P1 == Cogen T_C: {equal}",
    )


def check_prop_splits(s: TheoremSession) -> Outcome:
    if not (s.is_auslander() and s.is_tilted()):
        return _vacuous("not a tilted Auslander algebra")
    pair = ts.torsion_pair_of_tilting(s.tc, s.catalog, seed=s.caps.seed)
    return _verdict(pair.splitting, [f"in neither class: X_{i}" for i in pair.neither], f"F(T_C) = {pair.torsionfree_indices}")


def check_main_z(s: TheoremSession) -> Outcome:
    if not s.is_auslander() or s.gldim != HomDim.finite(2):
        return _vacuous("not an Auslander algebra of global dimension 2")
    translate = tau(hs.syzygy(dual_regular_module(s.algebra)))
    small = _known(hs.projective_dimension(translate, s.caps.resolution, s.caps.seed).at_most(1), "pd tau Omega D(Lambda)")
    tilted = s.is_tilted()
    return _verdict(small == tilted, [f"pd(tau Omega D Lambda) <= 1 is {small}, tilted is {tilted}"], f"tilted = {tilted}")


def _ext_translates(s: TheoremSession):
    left = tau_inv(hs.cosyzygy(regular_module(s.algebra)))
    right = tau(hs.syzygy(dual_regular_module(s.algebra)))
    return left, right


def check_tilted_homological_lemmas(s: TheoremSession) -> Outcome:
    if not s.is_tilted() or s.gldim != HomDim.finite(2):
        return _vacuous("not a tilted algebra of global dimension 2")
    left, right = _ext_translates(s)
    failures = []
    for i, x in enumerate(s.catalog.modules):
        if bool(s.pd(i).at_most(1)) != (ms.hom_dim(left, x) == 0):
            failures.append(f"X_{i}: pd <= 1 disagrees with Hom(tau^-1 Omega^-1 Lambda, X) = 0")
        if bool(s.id(i).at_most(1)) != (ms.hom_dim(x, right) == 0):
            failures.append(f"X_{i}: id <= 1 disagrees with Hom(X, tau Omega D Lambda) = 0")
        if not (s.pd(i).at_most(1) or s.id(i).at_most(1)):
            failures.append(f"X_{i}: pd and id both exceed 1")
    for x in ms.indecomposable_summands(left, seed=s.caps.seed):
        if not _known(hs.injective_dimension(x, s.caps.resolution, s.caps.seed).at_most(1), "id"):
            failures.append(f"summand {x.dims} of tau^-1 Omega^-1 Lambda has id > 1")
    for x in ms.indecomposable_summands(right, seed=s.caps.seed):
        if not _known(hs.projective_dimension(x, s.caps.resolution, s.caps.seed).at_most(1), "pd"):
            failures.append(f"summand {x.dims} of tau Omega D Lambda has pd > 1")
    return _verdict(not failures, failures, f"checked {s.catalog.size} indecomposables")


def check_tilted_dichotomy(s: TheoremSession) -> Outcome:
    if not s.is_tilted():
        return _vacuous("not tilted")
    bad = [i for i in range(s.catalog.size) if not (s.pd(i).at_most(1) or s.id(i).at_most(1))]
    return _verdict(not bad, [f"X_{i}: pd {s.pd(i)}, id {s.id(i)}" for i in bad], "every indecomposable has pd <= 1 or id <= 1")


def check_symmetry(s: TheoremSession) -> Outcome:
    here = s.is_1ag()
    there = TheoremSession(s.algebra.opposite(), s.caps).is_1ag()
    return _verdict(here == there, [f"1-AG is {here} but {there} for the opposite algebra"], f"1-AG on both sides: {here}")


def check_left_part(s: TheoremSession) -> Outcome:
    return _passed(f"left part = {s.left_part}")


def check_left_part_in_p1(s: TheoremSession) -> Outcome:
    left = set(s.left_part)
    failures = [f"X_{i} in the left part has pd {s.pd(i)}" for i in sorted(left - set(s.p1_set))]
    for j in sorted(left):
        outside = sorted(predecessors(s.catalog, j) - left)
        if outside:
            failures.append(f"predecessors {outside} of X_{j} lie outside the left part")
    return _verdict(not failures, failures, "left part inside P1 and closed under predecessors")


def check_ext_vanishing_lemma(s: TheoremSession) -> Outcome:
    catalog = s.catalog
    in_c = [i for i, x in enumerate(catalog.modules) if ts.in_C_lambda(x)]
    pd_one = [j for j in range(catalog.size) if s.pd(j) == HomDim.finite(1)]
    if not in_c or not pd_one:
        return _vacuous("no pair (X in C, Y with pd 1)")
    failures = [f"Ext^1(X_{j}, X_{i}) != 0" for i in in_c for j in pd_one if s.ext_dims[j, i]]
    return _verdict(not failures, failures, f"{len(in_c) * len(pd_one)} pairs")


def check_tc_construction(s: TheoremSession) -> Outcome:
    """domdim >= 2 iff T_C is a tilting module in C iff C_C is a cotilting module in C."""
    dominant = _at_least_two(s.domdim)
    tilting = s.tc_report.is_tilting and s.tc_in_c
    cotilting = s.cc_report.is_cotilting and s.cc_in_c
    failures = []
    if not dominant == tilting == cotilting:
        failures.append(
            f"domdim >= 2 is {dominant}, T_C tilting in C is {tilting}, C_C cotilting in C is {cotilting}"
        )
    if s.is_1ag() and not ms.is_isomorphic(s.tc, s.cc, seed=s.caps.seed):
        failures.append("T_C and C_C are not isomorphic on a 1-AG algebra")
    return _verdict(not failures, failures, f"T_C dims {list(s.tc.dims)}, tilting = {tilting}")


def check_splitting_criterion(s: TheoremSession) -> Outcome:
    if not s.tc_report.is_tilting:
        return _vacuous("T_C is not tilting")
    pair = ts.torsion_pair_of_tilting(s.tc, s.catalog, seed=s.caps.seed)
    inside_p1 = set(pair.torsionfree_indices) <= set(s.p1_set)
    return _verdict(
        pair.splitting == inside_p1,
        [f"splitting is {pair.splitting} but F(T_C) inside P1 is {inside_p1}"],
        f"splitting = {pair.splitting}",
    )


def check_ext_projectives(s: TheoremSession) -> Outcome:
    found = [f"Lambda: {ts.ext_projectives_of_torsion_class(regular_module(s.algebra), s.catalog, seed=s.caps.seed)}"]
    if s.tc_report.is_tilting:
        found.append(f"T_C: {ts.ext_projectives_of_torsion_class(s.tc, s.catalog, seed=s.caps.seed)}")
    return _passed(*found)


def check_projective_adjunction(s: TheoremSession) -> Outcome:
    failures = [
        f"dim Hom(P_{v + 1}, X_{i}) != {x.dims[v]}"
        for v, p in enumerate(projectives(s.algebra))
        for i, x in enumerate(s.catalog.modules)
        if ms.hom_dim(p, x) != x.dims[v]
    ]
    return _verdict(not failures, failures, "dim Hom(P_v, X) = dim X_v")


def check_injective_adjunction(s: TheoremSession) -> Outcome:
    failures = [
        f"dim Hom(X_{i}, I_{v + 1}) != {x.dims[v]}"
        for v, inj in enumerate(injectives(s.algebra))
        for i, x in enumerate(s.catalog.modules)
        if ms.hom_dim(x, inj) != x.dims[v]
    ]
    return _verdict(not failures, failures, "dim Hom(X, I_v) = dim X_v")


def check_tau_inverse_identity(s: TheoremSession) -> Outcome:
    catalog = s.catalog
    failures = []
    for i, j in catalog.tau_index.items():
        if catalog.tau_inv_index.get(j) != i or not ms.is_isomorphic(tau_inv(tau(catalog.modules[i])), catalog.modules[i], seed=s.caps.seed):
            failures.append(f"tau^-1 tau X_{i} is not X_{i}")
    for i, j in catalog.tau_inv_index.items():
        if catalog.tau_index.get(j) != i:
            failures.append(f"tau tau^-1 X_{i} is not X_{i}")
    return _verdict(not failures, failures, f"{len(catalog.tau_index)} translates")


def check_ar_formula(s: TheoremSession) -> Outcome:
    catalog = s.catalog
    failures = []
    for i, m in enumerate(catalog.modules):
        translate = tau(m)
        for j, n in enumerate(catalog.modules):
            stable = hs.stable_hom_dimension(n, translate) if not translate.is_zero else 0
            if s.ext_dims[i, j] != stable:
                failures.append(f"dim Ext^1(X_{i}, X_{j}) = {s.ext_dims[i, j]} but stable Hom(X_{j}, tau X_{i}) = {stable}")
    return _verdict(not failures, failures, f"{catalog.size ** 2} pairs")


def check_ext_balance(s: TheoremSession) -> Outcome:
    modules = s.catalog.modules
    failures = [
        f"Ext^1(X_{i}, X_{j}) is {s.ext_dims[i, j]} via syzygy, {hs.ext1_via_cosyzygy(m, n)} via cosyzygy"
        for i, m in enumerate(modules)
        for j, n in enumerate(modules)
        if hs.ext1_via_cosyzygy(m, n) != s.ext_dims[i, j]
    ]
    return _verdict(not failures, failures, f"{len(modules) ** 2} pairs")


def _pd_of(s: TheoremSession, module) -> HomDim:
    values = []
    for x in ms.indecomposable_summands(module, seed=s.caps.seed):
        i = s.catalog.index_of(x)
        if i is None:
            raise ValidationFailed(f"summand {x.dims} missing from the catalog")
        values.append(s.pd(i))
    return max_dim(values)


def check_ses_pd_bound(s: TheoremSession) -> Outcome:
    """pd N <= max(pd M, 1 + pd L) on sampled 0 -> L -> M -> N -> 0, with equality when pd M != pd L."""
    catalog = s.catalog
    pairs = [(i, j) for i in range(catalog.size) for j in range(catalog.size) if s.ext_dims[i, j]]
    if not pairs:
        return _vacuous("no nonsplit extensions between indecomposables")
    s._require_resolved(catalog.pd_table, "pd")
    rng = np.random.default_rng(s.caps.seed)
    field = s.algebra.field
    failures = []
    spaces = {}
    for _ in range(settings.SES_SAMPLES):
        i, j = pairs[int(rng.integers(len(pairs)))]
        if (i, j) not in spaces:
            spaces[i, j] = hs.ext1(catalog.modules[i], catalog.modules[j])
        ext = spaces[i, j]
        coeffs = field.random_matrix(rng, ext.dimension, 1)[:, 0]
        if not np.any(coeffs):
            coeffs[0] = 1
        cocycle = ext.cocycles[0].scaled(int(coeffs[0]))
        for c, phi in zip(coeffs[1:], ext.cocycles[1:]):
            cocycle = cocycle + phi.scaled(int(c))
        middle, _, _ = hs.extension_module(ext, cocycle)
        left, mid, right = s.pd(j).as_float(), _pd_of(s, middle).as_float(), s.pd(i).as_float()
        bound = max(mid, 1 + left)
        if right > bound or (mid != left and right != bound):
            failures.append(f"0 -> X_{j} -> E -> X_{i} -> 0: pd {right} against bound {bound}")
    return _verdict(not failures, failures, f"{settings.SES_SAMPLES} sampled extensions")


def check_gldim_formula(s: TheoremSession) -> Outcome:
    by_catalog = max_dim(s.catalog.pd_table)
    if s.gldim.is_exceeded or by_catalog.is_exceeded:
        raise Inconclusive(f"gl.dim {s.gldim}, largest catalog pd {by_catalog}")
    return _verdict(
        by_catalog == s.gldim,
        [f"gl.dim {s.gldim} but the largest pd over the catalog is {by_catalog}"],
        f"gl.dim = {s.gldim}",
    )


def check_catalog_closure(s: TheoremSession) -> Outcome:
    catalog = s.catalog
    failures = []
    for module in projectives(s.algebra) + injectives(s.algebra):
        if catalog.index_of(module) is None:
            failures.append(f"P_v / I_v of dimension vector {module.dims} missing")
    for i, module in enumerate(catalog.modules):
        if catalog.hom_dims[i, i] < 1:
            failures.append(f"End(X_{i}) = 0")
        images = [tau(module), tau_inv(module)]
        if i in catalog.sequences:
            images.append(catalog.sequences[i].middle)
        for image in images:
            for x in ms.indecomposable_summands(image, seed=s.caps.seed):
                if catalog.index_of(x) is None:
                    failures.append(f"{x.dims} reached from X_{i} is not in the catalog")
    return _verdict(not failures, failures, f"{catalog.size} indecomposables")


def check_catalog_connectivity(s: TheoremSession) -> Outcome:
    quiver = nx.Graph()
    quiver.add_nodes_from(range(s.algebra.vertex_count))
    quiver.add_edges_from((a.source, a.target) for a in s.algebra.quiver.arrows)
    if not nx.is_connected(quiver):
        return _vacuous("the quiver is not connected")
    connected = nx.is_weakly_connected(s.catalog.hom_graph())
    return _verdict(connected, ["the nonzero-Hom graph of the catalog is disconnected"], "connected")


def check_ar_sequences(s: TheoremSession) -> Outcome:
    catalog = s.catalog
    failures = []
    for i, sequence in sorted(catalog.sequences.items()):
        if validate_ar_sequence(sequence, catalog):
            continue
        try:
            ar_sequence(catalog.modules[i], catalog=catalog, seed=s.caps.seed)
        except ValidationFailed as exc:
            failures.append(f"X_{i}: {exc}")
    return _verdict(not failures, failures, f"{len(catalog.sequences)} sequences validated")


CHECKS: Dict[str, Callable[[TheoremSession], Outcome]] = {
    "one_ag": check_one_ag,
    "auslander": check_auslander,
    "main_theorem": check_main,
    "main_implication": check_main_implication,
    "prop_easy1": check_prop_easy1,
    "prop_easy2": check_prop_easy2,
    "prop_splits": check_prop_splits,
    "main_z": check_main_z,
    "tilted_homological_lemmas": check_tilted_homological_lemmas,
    "tilted_dichotomy": check_tilted_dichotomy,
    "symmetry": check_symmetry,
    "left_part": check_left_part,
    "left_part_in_p1": check_left_part_in_p1,
    "ext_vanishing_lemma": check_ext_vanishing_lemma,
    "tc_construction": check_tc_construction,
    "splitting_criterion": check_splitting_criterion,
    "ext_projectives": check_ext_projectives,
    "projective_adjunction": check_projective_adjunction,
    "injective_adjunction": check_injective_adjunction,
    "tau_inverse_identity": check_tau_inverse_identity,
    "ar_formula": check_ar_formula,
    "ext_balance": check_ext_balance,
    "ses_pd_bound": check_ses_pd_bound,
    "gldim_formula": check_gldim_formula,
    "catalog_closure": check_catalog_closure,
    "catalog_connectivity": check_catalog_connectivity,
    "ar_sequences": check_ar_sequences,
}


def run_check(session: TheoremSession, name: str) -> CheckResult:
    """Run one named check; known failure and inconclusive errors become statuses."""
    try:
        status, evidence = CHECKS[name](session)
    except Inconclusive as exc:
        status, evidence = CheckStatus.INCONCLUSIVE, [f"{type(exc).__name__}: {exc}"]
    except (CrossCheckMismatch, ValidationFailed) as exc:
        status, evidence = CheckStatus.FAIL, [f"{type(exc).__name__}: {exc}"]
    if status == CheckStatus.FAIL:
        logger.warning(f"❌ {session.algebra.name}: {name} failed: {evidence[0] if evidence else ''}")
    else:
        logger.info(f"✅ {session.algebra.name}: {name} {status.value}")
    return CheckResult(algebra=session.algebra.name, name=name, status=status, evidence=evidence)


def run_suite(algebra: AlgebraPresentation, caps: RunCaps = RunCaps()) -> SuiteReport:
    """Every check exactly once, in a fixed order."""
    started = time.perf_counter()
    session = TheoremSession(algebra, caps)
    checks = [run_check(session, name) for name in CHECKS]
    return SuiteReport(
        summary=summarize(session),
        verdict=theorem_verdict(session),
        checks=checks,
        seconds=time.perf_counter() - started,
    )
