import json
from pydantic import BaseModel, Field
from typing import Optional, List
from enum import Enum


# --- Enums ---

class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    INCONCLUSIVE = "inconclusive"


# --- Per-algebra records ---

class AlgebraSummary(BaseModel):
    name: str
    prime: int
    vertices: int
    arrows: int
    dimension: int
    gldim: str
    domdim: str
    id_regular: str  # id of the regular module
    pd_dual: str  # pd of D(Lambda)
    selfinjective: bool
    gorenstein: Optional[bool] = None  # None when a cap was hit


class CatalogEntry(BaseModel):
    index: int
    dims: List[int]
    pd: str
    id: str
    tau: Optional[int] = None
    tau_inv: Optional[int] = None
    projective: bool
    injective: bool


class CheckResult(BaseModel):
    algebra: str
    name: str
    status: CheckStatus
    evidence: List[str] = Field(default_factory=list)

    def record(self) -> str:
        payload = {"kind": "check", **self.model_dump(mode="json")}
        return json.dumps(payload, sort_keys=True)


class AlgebraVerdict(BaseModel):
    algebra: str
    status: CheckStatus = CheckStatus.PASS  # fail or inconclusive when the verdict could not be completed
    is_selfinjective: bool
    is_gorenstein: Optional[bool] = None
    is_1ag: Optional[bool] = None  # None: no answer (see status)
    is_auslander: Optional[bool] = None
    is_tilted: Optional[bool] = None  # None: oracle not run (catalog unavailable or search infeasible)
    main_theorem_lhs: Optional[bool] = None
    main_theorem_rhs: Optional[bool] = None
    main_theorem_consistent: Optional[bool] = None
    left_part: List[int] = Field(default_factory=list)
    cogen_tc: List[int] = Field(default_factory=list)
    p1_class: List[int] = Field(default_factory=list)
    detail: List[str] = Field(default_factory=list)


class SuiteReport(BaseModel):
    summary: AlgebraSummary
    verdict: AlgebraVerdict
    checks: List[CheckResult]
    seconds: float = 0.0  # human report only

    @property
    def statuses(self) -> List[CheckStatus]:
        return [self.verdict.status] + [c.status for c in self.checks]

    @property
    def worst(self) -> CheckStatus:
        statuses = set(self.statuses)
        for status in (CheckStatus.FAIL, CheckStatus.INCONCLUSIVE):
            if status in statuses:
                return status
        return CheckStatus.PASS

    def records(self) -> List[str]:
        """Machine-readable lines: one `algebra` record, then one per check."""
        head = {
            "kind": "algebra",
            "summary": self.summary.model_dump(mode="json"),
            "verdict": self.verdict.model_dump(mode="json"),
        }
        return [json.dumps(head, sort_keys=True)] + [c.record() for c in self.checks]
