"""
Report models for the bound checks and the full analysis.

Every bound record carries its guard evaluation, so a record whose
hypotheses fail ("applicable" false) is distinguishable from a pass.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

REPORT_SCHEMA = "walkreg-report/1"


class GodsilRecord(BaseModel):
    theta: float = Field(..., description="Eigenvalue other than +-k")
    multiplicity: int
    k: int
    bound: float = Field(..., description="(m + 2)(m - 1) / 2")
    guards: Dict[str, bool] = Field(default_factory=dict)
    applicable: bool = False
    passed: Optional[bool] = None


class TerwilligerRecord(BaseModel):
    vertex: int
    eta_min: float = Field(..., description="Smallest eigenvalue of the local graph")
    eta_1: Optional[float] = Field(None, description="Second-largest eigenvalue of the local graph")
    lower_bound: float = Field(..., description="-1 - b_1 / (theta_1 + 1)")
    upper_bound: float = Field(..., description="-1 - b_1 / (theta_d + 1)")
    lower_holds: bool
    upper_holds: bool
    asserted: bool = Field(False, description="True when the graph is 2-walk-regular and failures are errors")


class LocalMultiplicityRecord(BaseModel):
    theta: float
    multiplicity: int
    guards: Dict[str, bool] = Field(default_factory=dict)
    applicable: bool = False
    local_eigenvalue: Optional[float] = Field(None, description="b = -1 - b_1 / (theta + 1)")
    required_multiplicity: Optional[int] = None
    min_found: Optional[int] = Field(None, description="Smallest multiplicity of b over all local graphs")
    extreme: Optional[bool] = Field(None, description="theta is theta_1 or theta_d")
    passed: Optional[bool] = None


class FundamentalRecord(BaseModel):
    guards: Dict[str, bool] = Field(default_factory=dict)
    applicable: bool = False
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    gap: Optional[float] = None
    equality: Optional[bool] = None
    equality_branch: Optional[str] = Field(None, description="'local_srg' for a_1 > 0, 'bipartite' for a_1 = 0")
    branch_holds: Optional[bool] = None
    sigma: Optional[float] = None
    tau: Optional[float] = None
    local_lhs: Optional[float] = Field(None, description="k (a_1 + sigma tau) on the local graph")
    local_rhs: Optional[float] = Field(None, description="(a_1 - sigma)(a_1 - tau) on the local graph")
    passed: Optional[bool] = None


class MultiplicityRecord(BaseModel):
    statement: str
    guards: Dict[str, bool] = Field(default_factory=dict)
    applicable: bool = False
    holds: Optional[bool] = None
    detail: Dict[str, Any] = Field(default_factory=dict)


class BoundsReport(BaseModel):
    godsil: List[GodsilRecord] = Field(default_factory=list)
    terwilliger: List[TerwilligerRecord] = Field(default_factory=list)
    local_multiplicity: List[LocalMultiplicityRecord] = Field(default_factory=list)
    fundamental: Optional[FundamentalRecord] = None
    multiplicity: List[MultiplicityRecord] = Field(default_factory=list)
    clique_rank: List[Dict[str, Any]] = Field(default_factory=list)
    finiteness: Optional[Dict[str, Any]] = None

    def all_passed(self) -> bool:
        """No applicable record failed (report-only Terwilliger records excluded)."""
        checks = [r.passed for r in self.godsil + self.local_multiplicity if r.applicable]
        checks += [r.lower_holds and r.upper_holds for r in self.terwilliger if r.asserted]
        checks += [r.holds for r in self.multiplicity if r.applicable]
        if self.fundamental is not None and self.fundamental.applicable:
            checks.append(self.fundamental.passed)
        return all(check is not False for check in checks)


class GraphSummary(BaseModel):
    name: str = ""
    n: int
    edges: int
    graph6: str


class CosineRecord(BaseModel):
    theta: float
    multiplicity: int
    order: Optional[int] = Field(None, description="Largest t with the idempotent constant up to distance t")
    cosines: List[float] = Field(default_factory=list)


class AnalysisReport(BaseModel):
    """Everything walkreg knows about one graph, in a stable key order."""

    report_schema: str = Field(REPORT_SCHEMA, serialization_alias="schema")
    graph: GraphSummary
    metrics: Dict[str, Any]
    skipped: List[str] = Field(default_factory=list)
    skip_reason: Optional[str] = None
    walk: Optional[Dict[str, Any]] = None
    spectrum: Optional[Dict[str, Any]] = None
    spectral_order: Optional[int] = None
    cosines: List[CosineRecord] = Field(default_factory=list)
    covers: List[Dict[str, Any]] = Field(default_factory=list)
    bounds: Optional[BoundsReport] = None
    cliques: Optional[Dict[str, Any]] = None
    geometry: Optional[Dict[str, Any]] = None
    construction: Optional[Dict[str, Any]] = None
