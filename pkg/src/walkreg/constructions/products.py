"""
Product-style constructions on vertex pairs.

Pair (x, u) of g x h is vertex x * |V(h)| + u (lexicographic). In the
coclique extension, copy i of vertex x is vertex x * s + i.
"""
from ..errors import PreconditionError
from ..models.construction import ConstructionResult
from ..models.graph import Graph
from ..utils.logging import get_logger
from .common import input_spectrum, is_connected_graph, merge_spectrum, require_walk_regular_at_least

logger = get_logger(__name__)


def _pairs(g: Graph, h: Graph):
    return tuple((x, u) for x in range(g.n) for u in range(h.n))


def kronecker_product(g: Graph, h: Graph) -> ConstructionResult:
    """
    (x, u) ~ (y, v) when x ~ y and u ~ v. Both factors 1-walk-regular gives a
    1-walk-regular product whenever it is connected (i.e. not both bipartite).
    """
    require_walk_regular_at_least(g, 1, "kronecker_product")
    require_walk_regular_at_least(h, 1, "kronecker_product")

    m = h.n
    edges = []
    for x, y in g.edges:
        for u, v in h.edges:
            edges += [(x * m + u, y * m + v), (x * m + v, y * m + u)]
    graph = Graph.from_edges(g.n * m, edges, name=f"{g.name or 'G'}(x){h.name or 'H'}")
    disconnected = not is_connected_graph(graph)

    predicted = merge_spectrum(
        (a * b, ma * mb) for a, ma in input_spectrum(g) for b, mb in input_spectrum(h)
    )
    return ConstructionResult(
        construction="kronecker_product",
        graph=graph,
        vertex_map=_pairs(g, h),
        guaranteed_order=None if disconnected else 1,
        disconnected=disconnected,
        predicted_spectrum=predicted,
    )


def cartesian_square(g: Graph) -> ConstructionResult:
    """(x, u) ~ (y, v) when x = y and u ~ v, or u = v and x ~ y. 1-walk-regular for 1-walk-regular g."""
    require_walk_regular_at_least(g, 1, "cartesian_square")

    n = g.n
    edges = []
    for x in range(n):
        for u, v in g.edges:
            edges += [(x * n + u, x * n + v), (u * n + x, v * n + x)]
    graph = Graph.from_edges(n * n, edges, name=f"{g.name or 'G'}(+){g.name or 'G'}")

    base = input_spectrum(g)
    return ConstructionResult(
        construction="cartesian_square",
        graph=graph,
        vertex_map=_pairs(g, g),
        guaranteed_order=1,
        disconnected=not is_connected_graph(graph),
        predicted_spectrum=merge_spectrum((a + b, ma * mb) for a, ma in base for b, mb in base),
    )


def coclique_extension(g: Graph, s: int) -> ConstructionResult:
    """
    Blow every vertex up into an independent s-set (adjacency A (x) J_s).

    Spectrum: s theta for every eigenvalue theta of g, and 0 with multiplicity n(s-1).
    """
    if s < 1:
        raise PreconditionError(f"coclique extension needs s >= 1, got {s}")
    require_walk_regular_at_least(g, 1, "coclique_extension")

    edges = []
    for x, y in g.edges:
        for i in range(s):
            for j in range(s):
                edges.append((x * s + i, y * s + j))
    graph = Graph.from_edges(g.n * s, edges, name=f"{g.name or 'graph'}[{s}]")

    pairs = [(s * value, mult) for value, mult in input_spectrum(g)]
    pairs.append((0.0, g.n * (s - 1)))
    return ConstructionResult(
        construction="coclique_extension",
        graph=graph,
        vertex_map=tuple((x, i) for x in range(g.n) for i in range(s)),
        guaranteed_order=1,
        disconnected=not is_connected_graph(graph),
        predicted_spectrum=merge_spectrum(pairs),
    )
