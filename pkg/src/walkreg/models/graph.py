"""
Immutable graph value types.

A Graph is built once and never mutated; analyses share it freely across
threads. Derived data (adjacency matrix, distances) is memoised in a private
cache that only ever grows.
"""
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..errors import GraphInputError

# Distance entry for pairs in different components
UNREACHABLE = -1

Edge = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on the dense vertex set 0..n-1."""

    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[Tuple[int, ...], ...]
    name: str = ""
    _cache: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)
    _lock: Any = field(default_factory=threading.Lock, repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], name: str = "") -> "Graph":
        """
        Build a graph from an edge iterable.

        Args:
            n: Number of vertices
            edges: Unordered vertex pairs; repeated pairs collapse to one edge
            name: Optional label carried into reports

        Raises:
            GraphInputError: On a negative vertex count, a self-loop or a vertex out of range
        """
        if n < 0:
            raise GraphInputError(f"Vertex count must be non-negative, got {n}")

        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"Self-loop at vertex {u} is not allowed")
            normalized.add((u, v) if u < v else (v, u))

        neighbours: List[List[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            neighbours[u].append(v)
            neighbours[v].append(u)

        return cls(
            n=n,
            edges=frozenset(normalized),
            adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbours),
            name=name,
        )

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, name: str = "") -> "Graph":
        """Build a graph from a symmetric 0/1 matrix with zero diagonal."""
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise GraphInputError(f"Adjacency matrix must be square, got shape {matrix.shape}")
        if not np.array_equal(matrix, matrix.T):
            raise GraphInputError("Adjacency matrix is not symmetric")
        rows, cols = np.nonzero(np.triu(matrix, 1))
        if np.any(np.diag(matrix)):
            raise GraphInputError("Adjacency matrix has a non-zero diagonal")
        return cls.from_edges(matrix.shape[0], zip(rows.tolist(), cols.tolist()), name=name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __str__(self) -> str:
        label = self.name or "graph"
        return f"{label} (n={self.n}, m={len(self.edges)})"

    def cached(self, key: str, factory: Callable[[], Any]) -> Any:
        """Return a memoised derived value, computing it on first use."""
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = factory()
        with self._lock:
            return self._cache.setdefault(key, value)

    def renamed(self, name: str) -> "Graph":
        return Graph(n=self.n, edges=self.edges, adjacency=self.adjacency, name=name)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbours(self, x: int) -> Tuple[int, ...]:
        self.check_vertex(x)
        return self.adjacency[x]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise GraphInputError(f"Vertex {x} out of range 0..{self.n - 1}")

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def valency(self) -> Optional[int]:
        """Common degree for a regular graph, None otherwise (and for n = 0)."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def is_regular(self) -> bool:
        return self.valency() is not None

    def adjacency_matrix(self) -> np.ndarray:
        """Read-only int64 adjacency matrix."""

        def build() -> np.ndarray:
            matrix = np.zeros((self.n, self.n), dtype=np.int64)
            if self.edges:
                us, vs = zip(*self.edges)
                matrix[list(us), list(vs)] = 1
                matrix[list(vs), list(us)] = 1
            matrix.setflags(write=False)
            return matrix

        return self.cached("adjacency_matrix", build)


@dataclass(frozen=True, eq=False)
class DistanceData:
    """
    Hop distances of a graph.

    dist[x, y] is the length of a shortest path, or UNREACHABLE across
    components. class_counts[x, i] = |Γ_i(x)| for 0 <= i <= diameter.
    """

    dist: np.ndarray
    diameter: int
    class_counts: np.ndarray
    connected: bool

    def distance_class_sizes(self) -> Optional[List[int]]:
        """k_i when every vertex has the same distance profile, else None."""
        if self.class_counts.size == 0:
            return []
        first = self.class_counts[0]
        if np.all(self.class_counts == first):
            return [int(v) for v in first]
        return None


@dataclass(frozen=True)
class GraphMetrics:
    """Basic structural invariants; None stands for infinity where noted."""

    n: int
    edges: int
    valency: Optional[int]
    connected: bool
    bipartite: bool
    diameter: Optional[int]
    girth: Optional[int]
    odd_girth: Optional[int]
    complete_multipartite: bool

    @property
    def regular(self) -> bool:
        return self.valency is not None

    @property
    def s(self) -> Optional[int]:
        """The s in odd-girth 2s+1, None for bipartite graphs."""
        return None if self.odd_girth is None else (self.odd_girth - 1) // 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "edges": self.edges,
            "valency": self.valency,
            "connected": self.connected,
            "bipartite": self.bipartite,
            "diameter": self.diameter,
            "girth": self.girth,
            "odd_girth": self.odd_girth,
            "complete_multipartite": self.complete_multipartite,
        }
