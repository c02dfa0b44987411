"""
Distances, basic metrics and local graphs.

Most counting below goes through the distance-i matrices A_i: for a pair
(x, y) the entry (A_i A)[x, y] is |Γ(y) ∩ Γ_i(x)|, which gives a_j, b_j, c_j,
girths and triple numbers from a handful of integer matrix products.
"""
from typing import Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from ..models.graph import UNREACHABLE, DistanceData, Graph, GraphMetrics
from ..utils.logging import get_logger

logger = get_logger(__name__)


def distances(g: Graph) -> DistanceData:
    """
    All-pairs hop distances by breadth-first search from every vertex.

    Pairs in different components get UNREACHABLE; the diameter is taken over
    the finite entries. The result is memoised on the graph.
    """

    def build() -> DistanceData:
        if g.n == 0:
            empty = np.zeros((0, 0), dtype=np.int64)
            return DistanceData(dist=empty, diameter=0, class_counts=empty, connected=False)

        raw = shortest_path(csr_matrix(g.adjacency_matrix()), method="D", directed=False, unweighted=True)
        finite = np.isfinite(raw)
        dist = np.where(finite, raw, UNREACHABLE).astype(np.int64)
        dist.setflags(write=False)

        diameter = int(dist.max())
        counts = np.stack([(dist == i).sum(axis=1) for i in range(diameter + 1)], axis=1).astype(np.int64)
        counts.setflags(write=False)
        connected = bool(finite.all())
        logger.debug(f"Distances for {g}: diameter={diameter}, connected={connected}")
        return DistanceData(dist=dist, diameter=diameter, class_counts=counts, connected=connected)

    return g.cached("distances", build)


def distance_matrix(g: Graph, i: int) -> np.ndarray:
    """The 0/1 distance-i matrix A_i (all zeros outside 0..D)."""
    data = distances(g)
    if i < 0 or i > data.diameter:
        return np.zeros((g.n, g.n), dtype=np.int64)
    return g.cached(f"distance_matrix:{i}", lambda: (data.dist == i).astype(np.int64))


def neighbour_counts(g: Graph, i: int) -> np.ndarray:
    """Matrix whose (x, y) entry is |Γ(y) ∩ Γ_i(x)|."""
    return g.cached(f"neighbour_counts:{i}", lambda: distance_matrix(g, i) @ g.adjacency_matrix())


def is_connected(g: Graph) -> bool:
    return distances(g).connected


def _complete_multipartite(g: Graph) -> bool:
    """Non-adjacency (with equality) must be an equivalence with at least two equal classes."""
    if g.n < 2:
        return False
    everyone = set(range(g.n))
    classes = {frozenset(everyone - set(g.adjacency[x])) for x in range(g.n)}
    # the classes must partition the vertex set
    if sum(len(members) for members in classes) != g.n:
        return False
    sizes = {len(members) for members in classes}
    return len(classes) >= 2 and len(sizes) == 1


def metrics(g: Graph) -> GraphMetrics:
    """
    Regularity, connectivity, bipartiteness, girth, odd-girth and the
    complete-multipartite flag.

    For a root r and a vertex y with dist(r, y) = j, a neighbour of y at the
    same distance closes an odd walk of length 2j+1, and two neighbours at
    distance j-1 close an even one of length 2j. Minimising over all roots
    gives the girth and the odd-girth exactly.
    """

    def build() -> GraphMetrics:
        data = distances(g)
        girth: Optional[int] = None
        odd_girth: Optional[int] = None

        for j in range(1, data.diameter + 1):
            on_level = data.dist == j
            if odd_girth is None and np.any(neighbour_counts(g, j)[on_level] >= 1):
                odd_girth = 2 * j + 1
            if girth is None:
                if j >= 2 and np.any(neighbour_counts(g, j - 1)[on_level] >= 2):
                    girth = 2 * j
                elif odd_girth == 2 * j + 1:
                    girth = 2 * j + 1
            if girth is not None and odd_girth is not None:
                break

        result = GraphMetrics(
            n=g.n,
            edges=g.size,
            valency=g.valency(),
            connected=data.connected,
            bipartite=odd_girth is None,
            diameter=data.diameter if data.connected else None,
            girth=girth,
            odd_girth=odd_girth,
            complete_multipartite=_complete_multipartite(g),
        )
        logger.debug(f"Metrics for {g}: {result}")
        return result

    return g.cached("metrics", build)


def local_graph(g: Graph, x: int) -> Tuple[Graph, Tuple[int, ...]]:
    """
    The local graph Δ(x): the subgraph induced on the neighbours of x.

    Returns:
        (local graph, mapping) where mapping[i] is the vertex of g that local vertex i stands for
    """
    g.check_vertex(x)
    mapping = g.adjacency[x]
    index = {v: i for i, v in enumerate(mapping)}
    edges = [
        (index[u], index[v])
        for u in mapping
        for v in g.adjacency[u]
        if v in index and u < v
    ]
    return Graph.from_edges(len(mapping), edges, name=f"local({g.name or 'graph'},{x})"), mapping


def induced_subgraph(g: Graph, vertices) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph induced on the given vertices, relabelled in sorted order."""
    mapping = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(mapping)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(mapping), edges), mapping


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    return Graph.from_edges(g.n, edges, name=f"complement({g.name})" if g.name else "")
