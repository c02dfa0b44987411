"""Value types produced by the exact walk-count engine."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

TripleKey = Tuple[int, int, int]


@dataclass(frozen=True)
class WalkTable:
    """
    Exact powers A^0 .. A^d of the adjacency matrix.

    Powers are int64 while k^(l+1) fits, object arrays of Python ints after.
    """

    powers: Tuple[np.ndarray, ...]
    d: int
    traces: Tuple[int, ...] = ()

    def power(self, l: int) -> np.ndarray:
        return self.powers[l]


@dataclass(frozen=True)
class WalkObstruction:
    """Two pairs at the same distance with different l-walk counts."""

    distance: int
    length: int
    first: Tuple[int, int]
    second: Tuple[int, int]
    counts: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "distance": self.distance,
            "length": self.length,
            "pairs": [list(self.first), list(self.second)],
            "counts": list(self.counts),
        }


@dataclass(frozen=True)
class IntersectionTable:
    """a_j, b_j, c_j (and k_j) for 0 <= j <= t."""

    t: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    c: Tuple[int, ...]
    k: Tuple[int, ...]

    @property
    def valency(self) -> int:
        return self.b[0]

    def to_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "a": list(self.a), "b": list(self.b), "c": list(self.c), "k": list(self.k)}


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0, ..., b_{D-1}; c_1, ..., c_D} of a distance-regular graph."""

    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class DistanceRegularity:
    distance_regular: bool
    intersection_array: Optional[IntersectionArray] = None


@dataclass(frozen=True)
class WalkRegularityReport:
    """Everything the exact engine knows about one graph."""

    order: Optional[int]
    d: int
    diameter: int
    intersection: Optional[IntersectionTable]
    triple_numbers: Dict[TripleKey, int] = field(default_factory=dict)
    distance_regular: bool = False
    intersection_array: Optional[IntersectionArray] = None
    obstruction: Optional[WalkObstruction] = None

    def triple(self, h: int, i: int, j: int) -> int:
        return self.triple_numbers[(h, min(i, j), max(i, j))]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "d": self.d,
            "diameter": self.diameter,
            "intersection": self.intersection.to_dict() if self.intersection else None,
            "triple_numbers": [
                {"h": h, "i": i, "j": j, "value": value}
                for (h, i, j), value in sorted(self.triple_numbers.items())
            ],
            "distance_regular": self.distance_regular,
            "intersection_array": (
                {"b": list(self.intersection_array.b), "c": list(self.intersection_array.c)}
                if self.intersection_array
                else None
            ),
            "obstruction": self.obstruction.to_dict() if self.obstruction else None,
        }
