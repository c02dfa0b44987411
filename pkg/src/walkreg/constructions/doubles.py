"""
Doubling constructions.

bipartite_double: x+ is vertex x, x- is vertex n + x; x+ ~ y- when x ~ y.
complement_block_double: copy c of x is vertex c*n + x; adjacency
[[A, Abar], [Abar, A]] with Abar the complement (no loops).
halved_graphs: the two colour classes of a bipartite graph, each in
increasing vertex order, adjacent at distance two.
"""
from typing import Tuple

import numpy as np

from ..errors import PreconditionError
from ..graph_core.structure import distances, metrics
from ..models.construction import ConstructionResult
from ..models.graph import Graph
from ..utils.logging import get_logger
from .common import input_spectrum, is_connected_graph, merge_spectrum, order_or_none, strongly_regular_parameters

logger = get_logger(__name__)


def bipartite_double(g: Graph) -> ConstructionResult:
    """
    The bipartite double of g.

    When g is connected, non-bipartite with odd-girth 2s+1 and t-walk-regular,
    the double is min(s, t)-walk-regular. A bipartite g gives two disjoint copies.
    """
    n = g.n
    edges = []
    for x, y in g.edges:
        edges += [(x, n + y), (y, n + x)]
    double = Graph.from_edges(2 * n, edges, name=f"double({g.name or 'graph'})")

    info = metrics(g)
    order = order_or_none(g)
    guaranteed = None
    if not info.bipartite and order is not None:
        guaranteed = min(info.s, order)

    predicted = None
    if n:
        base = input_spectrum(g)
        predicted = merge_spectrum([(v, m) for v, m in base] + [(-v, m) for v, m in base])

    result = ConstructionResult(
        construction="bipartite_double",
        graph=double,
        vertex_map=tuple((x, "+") for x in range(n)) + tuple((x, "-") for x in range(n)),
        guaranteed_order=guaranteed,
        disconnected=not is_connected_graph(double),
        predicted_spectrum=predicted,
    )
    logger.debug(f"bipartite_double({g}): guaranteed {guaranteed}, disconnected={result.disconnected}")
    return result


def complement_block_double(g: Graph) -> ConstructionResult:
    """
    The 2n-vertex graph with adjacency [[A, Abar], [Abar, A]]; valency n - 1.

    Spectrum: n-1, 2k-n+1, -1^(n-1) and 2 theta_i + 1 for each non-principal
    eigenvalue of g. For a strongly regular g, 2k-n+1 is simple unless
    n = 4k - 2 mu - 2 lambda (the output is then a Taylor graph).
    """
    if not is_connected_graph(g) or not g.is_regular():
        raise PreconditionError(f"complement_block_double needs a connected regular graph, got {g}")

    n, k = g.n, g.valency()
    edges = []
    for x, y in g.edges:
        edges += [(x, y), (n + x, n + y)]
    for x in range(n):
        for y in range(n):
            if x != y and not g.has_edge(x, y):
                edges.append((x, n + y))
    graph = Graph.from_edges(2 * n, edges, name=f"complement_double({g.name or 'graph'})")

    base = input_spectrum(g)
    pairs = [(n - 1, 1), (2 * k - n + 1, 1), (-1, n - 1)]
    # the first pair of the input spectrum is k itself
    pairs += [(2 * value + 1, mult) for value, mult in base[1:]]

    notes = {}
    parameters = strongly_regular_parameters(g)
    if parameters is not None:
        _, _, lam, mu = parameters
        notes["strongly_regular"] = list(parameters)
        notes["taylor_exceptional"] = n == 4 * k - 2 * mu - 2 * lam

    order = order_or_none(g)
    return ConstructionResult(
        construction="complement_block_double",
        graph=graph,
        vertex_map=tuple((x, c) for c in range(2) for x in range(n)),
        guaranteed_order=0 if order is not None else None,
        disconnected=not is_connected_graph(graph),
        predicted_spectrum=merge_spectrum(pairs),
        notes=notes,
    )


def halved_graphs(g: Graph) -> Tuple[ConstructionResult, ConstructionResult]:
    """
    The two halved graphs of a connected bipartite graph, each floor(t/2)-walk-regular.

    Raises:
        PreconditionError: g is disconnected or not bipartite
    """
    if not is_connected_graph(g):
        raise PreconditionError(f"halved graphs need a connected graph, got {g}")
    if not metrics(g).bipartite:
        raise PreconditionError(f"halved graphs need a bipartite graph, got {g}")

    dist = distances(g).dist
    order = order_or_none(g)
    guaranteed = order // 2 if order is not None else None

    halves = []
    for parity in (0, 1):
        members = tuple(int(v) for v in np.flatnonzero(dist[0] % 2 == parity))
        index = {v: i for i, v in enumerate(members)}
        edges = [(index[u], index[v]) for u in members for v in members if u < v and dist[u, v] == 2]
        half = Graph.from_edges(len(members), edges, name=f"half{parity}({g.name or 'graph'})")
        halves.append(
            ConstructionResult(
                construction="halved_graph",
                graph=half,
                vertex_map=members,
                guaranteed_order=guaranteed,
                disconnected=not is_connected_graph(half),
            )
        )
    return halves[0], halves[1]
