"""Clique and geometry value types."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

Clique = Tuple[int, ...]


@dataclass(frozen=True)
class CliqueSet:
    cliques: Tuple[Clique, ...]
    maximal: bool = True

    def __len__(self) -> int:
        return len(self.cliques)

    @property
    def clique_number(self) -> int:
        return max((len(c) for c in self.cliques), default=0)

    def size_histogram(self) -> Dict[int, int]:
        histogram: Dict[int, int] = {}
        for clique in self.cliques:
            histogram[len(clique)] = histogram.get(len(clique), 0) + 1
        return dict(sorted(histogram.items()))


@dataclass(frozen=True)
class DelsarteBound:
    bound: float
    integer_candidate: Optional[int]


@dataclass(frozen=True)
class CliqueCover:
    """Delsarte cliques (lines) with every edge in exactly one of them."""

    lines: Tuple[Clique, ...]
    edge_assignment: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def lines_per_vertex(self, n: int) -> List[int]:
        counts = [0] * n
        for line in self.lines:
            for x in line:
                counts[x] += 1
        return counts

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lines": [list(line) for line in self.lines],
            "edge_assignment": [[u, v, line] for (u, v), line in sorted(self.edge_assignment.items())],
        }


@dataclass(frozen=True)
class CliqueProfile:
    """
    Distance profile of a clique C.

    phi[i] is the number of vertices of C at distance exactly i from any
    vertex at distance i from C; the other |C| - phi[i] are at distance i + 1.
    None marks a distance that no vertex attains.
    """

    covering_radius: int
    phi: Tuple[Optional[int], ...]
    phi_predicted: Tuple[Optional[float], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "covering_radius": self.covering_radius,
            "phi": list(self.phi),
            "phi_predicted": list(self.phi_predicted),
        }


class GeometricStatus(str, Enum):
    GEOMETRIC = "geometric"
    NOT_GEOMETRIC = "not_geometric"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class GeometricResult:
    status: GeometricStatus
    cover: Optional[CliqueCover] = None
    reason: str = ""
    delsarte_cliques: int = 0
    search_nodes: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "delsarte_cliques": self.delsarte_cliques,
            "search_nodes": self.search_nodes,
            "cover": self.cover.to_dict() if self.cover else None,
        }


class SufficiencyVerdict(str, Enum):
    GUARANTEED = "geometric guaranteed"
    INCONCLUSIVE = "inconclusive"
    GUARDS_UNMET = "guards unmet"


@dataclass(frozen=True)
class SufficiencyReport:
    verdict: SufficiencyVerdict
    omega: int
    guards: Dict[str, bool]
    a1: Optional[int] = None
    c2: Optional[int] = None
    cross_checked: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "omega": self.omega,
            "guards": dict(self.guards),
            "a1": self.a1,
            "c2": self.c2,
            "cross_checked": self.cross_checked,
        }


@dataclass(frozen=True)
class FinitenessBounds:
    """Vertex and valency bounds for 2-walk-regular graphs with bounded smallest eigenvalue."""

    omega: int
    epsilon: Optional[float]
    guards: Dict[str, bool]
    vertex_bound: Optional[float] = None
    valency_bound: Optional[float] = None
    vertex_bound_holds: Optional[bool] = None
    valency_bound_holds: Optional[bool] = None
    layer_growth_holds: Optional[bool] = None
    local_coclique_holds: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "omega": self.omega,
            "epsilon": self.epsilon,
            "guards": dict(self.guards),
            "vertex_bound": self.vertex_bound,
            "valency_bound": self.valency_bound,
            "vertex_bound_holds": self.vertex_bound_holds,
            "valency_bound_holds": self.valency_bound_holds,
            "layer_growth_holds": self.layer_growth_holds,
            "local_coclique_holds": self.local_coclique_holds,
        }
