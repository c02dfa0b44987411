"""
Graphs derived on the same or on edge-based vertex sets.

distance_k_graph keeps the vertex labels. line_graph numbers the edges of
g in sorted order, so output vertex i is the i-th edge (u, v) with u < v.
"""
from itertools import combinations

import numpy as np

from ..errors import PreconditionError
from ..graph_core.structure import distances, metrics
from ..models.construction import ConstructionResult
from ..models.graph import Graph
from ..utils.logging import get_logger
from .common import input_spectrum, is_connected_graph, merge_spectrum, order_or_none

logger = get_logger(__name__)


def distance_k_graph(g: Graph, i: int) -> ConstructionResult:
    """
    Pairs at distance exactly i become adjacent.

    For i = 2, a t-walk-regular (t >= 2), non-complete-multipartite g with
    odd-girth 2s+1 gives a min(floor(s/2), floor(t/2))-walk-regular graph.
    Bipartite g has no odd cycles and its distance-2 graph splits along the
    bipartition, so there is no guarantee.

    Raises:
        PreconditionError: i outside 1..D
    """
    data = distances(g)
    if not 1 <= i <= data.diameter:
        raise PreconditionError(f"distance index {i} outside 1..{data.diameter}")

    rows, cols = np.nonzero(np.triu(data.dist == i, 1))
    graph = Graph.from_edges(g.n, zip(rows.tolist(), cols.tolist()), name=f"{g.name or 'graph'}_{i}")

    guaranteed = None
    if i == 1:
        guaranteed = order_or_none(g)
    elif i == 2:
        info = metrics(g)
        order = order_or_none(g)
        if order is not None and order >= 2 and not info.complete_multipartite and info.s is not None:
            guaranteed = min(info.s // 2, order // 2)

    result = ConstructionResult(
        construction=f"distance_{i}_graph",
        graph=graph,
        vertex_map=tuple(range(g.n)),
        guaranteed_order=guaranteed,
        disconnected=not is_connected_graph(graph),
    )
    logger.debug(f"distance_k_graph({g}, {i}): guaranteed {guaranteed}")
    return result


def line_graph(g: Graph) -> ConstructionResult:
    """
    The line graph of a connected k-regular graph (k >= 2).

    If g is (t+1)-walk-regular with girth > 2t+1 the line graph is
    t-walk-regular; the largest such t is reported. Spectrum: theta + k - 2 for
    every eigenvalue theta of g, plus -2 with multiplicity |E| - n.
    """
    k = g.valency()
    if not is_connected_graph(g) or k is None or k < 2:
        raise PreconditionError(f"line_graph needs a connected regular graph with k >= 2, got {g}")

    edges = g.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    adjacent = []
    for x in range(g.n):
        incident = [index[(min(x, y), max(x, y))] for y in g.adjacency[x]]
        adjacent.extend(combinations(incident, 2))
    graph = Graph.from_edges(len(edges), adjacent, name=f"L({g.name or 'graph'})")

    order = order_or_none(g)
    girth = metrics(g).girth
    guaranteed = None
    if order is not None:
        for t in range(order - 1, -1, -1):
            if girth is None or girth > 2 * t + 1:
                guaranteed = t
                break

    pairs = [(value + k - 2, mult) for value, mult in input_spectrum(g)]
    pairs.append((-2.0, len(edges) - g.n))
    return ConstructionResult(
        construction="line_graph",
        graph=graph,
        vertex_map=tuple(edges),
        guaranteed_order=guaranteed,
        disconnected=not is_connected_graph(graph),
        predicted_spectrum=merge_spectrum(pairs),
    )
