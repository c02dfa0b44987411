from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from .graph import Graph

SpectrumPairs = Tuple[Tuple[float, int], ...]


@dataclass(frozen=True)
class ConstructionResult:
    """
    Output of a graph construction.

    vertex_map[v] tells where output vertex v comes from (a signed copy, an
    edge, a pair of input vertices, ...). guaranteed_order is the
    walk-regularity order the construction is known to reach, None when
    nothing is claimed.
    """

    construction: str
    graph: Graph
    vertex_map: Tuple[Any, ...]
    guaranteed_order: Optional[int]
    disconnected: bool = False
    predicted_spectrum: Optional[SpectrumPairs] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "construction": self.construction,
            "n": self.graph.n,
            "edges": self.graph.size,
            "guaranteed_order": self.guaranteed_order,
            "disconnected": self.disconnected,
            "predicted_spectrum": (
                [{"value": value, "multiplicity": mult} for value, mult in self.predicted_spectrum]
                if self.predicted_spectrum is not None
                else None
            ),
            "notes": dict(self.notes),
        }
