"""
Geometric decompositions.

A graph is geometric when some set of Delsarte cliques (lines) covers every
edge exactly once. Delsarte cliques exist only when 1 - k/theta_d is an
integer, so that gate runs before any search.
"""
import math
from itertools import combinations
from typing import List, Optional

import numpy as np

from ..config_manager import AnalysisConfig
from ..errors import PreconditionError, TheoremViolation
from ..exact_walk.intersection import intersection_numbers
from ..exact_walk.walk_counts import require_connected_regular, walk_regularity_order
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import distances
from ..models.geometry import (
    Clique,
    CliqueCover,
    FinitenessBounds,
    GeometricResult,
    GeometricStatus,
    SufficiencyReport,
    SufficiencyVerdict,
)
from ..models.graph import Graph
from ..spectral.eigen import spectrum
from ..utils.logging import get_logger
from .cliques import delsarte_bound, is_delsarte_clique, maximal_cliques, smallest_idempotent
from .exact_cover import ExactCoverSolver

logger = get_logger(__name__)


def delsarte_cliques(g: Graph, config: Optional[AnalysisConfig] = None) -> List[Clique]:
    """Maximal cliques of Delsarte size that pass E chi = 0, sorted; empty when the bound is not an integer."""
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    theta_d = spectrum(g, config=config).values[-1]
    bound = delsarte_bound(k, theta_d, config.delsarte_integer_tol)
    if bound.integer_candidate is None:
        return []
    e_min = smallest_idempotent(g, config)
    return [
        c
        for c in maximal_cliques(g, config.clique_cap).cliques
        if len(c) == bound.integer_candidate and is_delsarte_clique(g, e_min, c, config)
    ]


def geometric_decomposition(g: Graph, config: Optional[AnalysisConfig] = None) -> GeometricResult:
    """
    Search for a set of Delsarte cliques partitioning the edge set.

    Raises:
        PreconditionError: g is not connected, regular and 1-walk-regular
        BudgetExceeded: The exact-cover search ran out of nodes (geometricity unknown)
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    order = walk_regularity_order(g)
    if order is None or order < 1:
        raise PreconditionError(f"geometric decomposition needs a 1-walk-regular graph; {g} has order {order}")

    theta_d = spectrum(g, config=config).values[-1]
    bound = delsarte_bound(k, theta_d, config.delsarte_integer_tol)
    if bound.integer_candidate is None:
        return GeometricResult(GeometricStatus.NOT_GEOMETRIC, reason=f"Delsarte bound {bound.bound:.6g} is not an integer")

    lines = delsarte_cliques(g, config)
    if not lines:
        return GeometricResult(GeometricStatus.NOT_GEOMETRIC, reason="no Delsarte cliques")

    line_edges = [frozenset(combinations(line, 2)) for line in lines]
    solver = ExactCoverSolver(g.sorted_edges(), line_edges, config.node_budget)
    chosen = solver.solve()
    if chosen is None:
        return GeometricResult(
            GeometricStatus.NOT_GEOMETRIC,
            reason="no exact cover of the edges by Delsarte cliques",
            delsarte_cliques=len(lines),
            search_nodes=solver.nodes,
        )

    cover_lines = tuple(lines[i] for i in sorted(chosen))
    assignment = {edge: index for index, line in enumerate(cover_lines) for edge in combinations(line, 2)}
    cover = CliqueCover(lines=cover_lines, edge_assignment=assignment)
    logger.info(f"{g}: geometric with {len(cover_lines)} lines of size {bound.integer_candidate}")
    return GeometricResult(
        GeometricStatus.GEOMETRIC,
        cover=cover,
        reason=f"{len(cover_lines)} lines",
        delsarte_cliques=len(lines),
        search_nodes=solver.nodes,
    )


def dual_graph(cover: CliqueCover, g: Graph) -> Graph:
    """Lines as vertices, adjacent when they share a vertex of g."""
    on_vertex: List[List[int]] = [[] for _ in range(g.n)]
    for index, line in enumerate(cover.lines):
        for x in line:
            on_vertex[x].append(index)
    edges = {pair for lines in on_vertex for pair in combinations(sorted(lines), 2)}
    return Graph.from_edges(len(cover.lines), edges, name=f"dual({g.name or 'graph'})")


def check_lines_per_vertex(g: Graph, cover: CliqueCover, theta_d: float, a1: int, tol: float = 1e-6) -> Optional[List[int]]:
    """
    When k = -theta_d (a_1 + 1), every vertex must lie on exactly -theta_d lines.

    Returns:
        Lines per vertex, or None when the identity k = -theta_d (a_1 + 1) does not apply
    """
    k = g.valency()
    counts = cover.lines_per_vertex(g.n)
    if k is None or abs(k + theta_d * (a1 + 1)) > tol:
        return None
    expected = round(-theta_d)
    if any(count != expected for count in counts):
        witness = {"graph6": encode_graph6(g), "lines_per_vertex": counts, "expected": expected}
        logger.error(f"{g}: lines per vertex differ from -theta_d; witness {witness}")
        raise TheoremViolation("a vertex does not lie on exactly -theta_d lines", witness)
    return counts


def local_coclique_bound(g: Graph, omega: int, a1: int) -> bool:
    """k <= omega^2 (a_1 + 1) for a 2-walk-regular graph with smallest eigenvalue >= -omega."""
    return g.valency() <= omega * omega * (a1 + 1)


def geometric_sufficiency(g: Graph, omega: int, config: Optional[AnalysisConfig] = None) -> SufficiencyReport:
    """
    A 2-walk-regular graph with D >= 2 and smallest eigenvalue in [-omega, 1 - omega)
    is geometric as soon as a_1 > omega^4 c_2. A guaranteed verdict is cross-checked
    against the exact-cover search.
    """
    config = config or AnalysisConfig()
    require_connected_regular(g)
    order = walk_regularity_order(g)
    diameter = distances(g).diameter
    theta_d = spectrum(g, config=config).values[-1]
    slack = config.bound_slack

    guards = {
        "omega_at_least_2": omega >= 2,
        "two_walk_regular": order is not None and order >= 2,
        "diameter_at_least_2": diameter >= 2,
        "smallest_eigenvalue_in_range": -omega - slack <= theta_d < 1 - omega - slack,
    }
    if not all(guards.values()):
        return SufficiencyReport(SufficiencyVerdict.GUARDS_UNMET, omega, guards)

    table = intersection_numbers(g, 2)
    a1, c2 = table.a[1], table.c[2]
    if not local_coclique_bound(g, omega, a1):
        witness = {"graph6": encode_graph6(g), "k": g.valency(), "omega": omega, "a1": a1}
        logger.error(f"{g}: k > omega^2 (a_1 + 1); witness {witness}")
        raise TheoremViolation("local coclique bound k <= omega^2 (a_1 + 1) fails", witness)

    if a1 <= omega ** 4 * c2:
        return SufficiencyReport(SufficiencyVerdict.INCONCLUSIVE, omega, guards, a1=a1, c2=c2)

    result = geometric_decomposition(g, config)
    if result.status is not GeometricStatus.GEOMETRIC:
        witness = {"graph6": encode_graph6(g), "a1": a1, "c2": c2, "omega": omega}
        logger.error(f"{g}: sufficient condition met but no geometric cover; witness {witness}")
        raise TheoremViolation("a_1 > omega^4 c_2 but the graph is not geometric", witness)
    return SufficiencyReport(SufficiencyVerdict.GUARANTEED, omega, guards, a1=a1, c2=c2, cross_checked=True)


def _log_power_bound(base: float, exponent: float, factor: float) -> float:
    """factor * base^exponent, +inf when it overflows a float."""
    log_value = exponent * math.log(base) + math.log(factor)
    return math.exp(log_value) if log_value < 700 else math.inf


def finiteness_bounds(g: Graph, config: Optional[AnalysisConfig] = None) -> FinitenessBounds:
    """
    Evaluate, with omega = ceil(-theta_d) and epsilon = c_2 / a_1 (kept below 1):

    - |V| < (2 omega^2 / epsilon)^D D k
    - k < D^2 (2 omega^2 / epsilon)^(2D + 4)  (D >= 3)
    - k_{i+1} c_2 <= b_1 k_i for 1 <= i < D
    - k <= omega^2 (a_1 + 1)

    Any failure of a bound whose guards hold is a TheoremViolation.
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    order = walk_regularity_order(g)
    data = distances(g)
    theta_d = spectrum(g, config=config).values[-1]
    omega = max(2, math.ceil(-theta_d - config.bound_slack))

    guards = {"two_walk_regular": order is not None and order >= 2, "diameter_at_least_3": data.diameter >= 3}
    if not guards["two_walk_regular"]:
        return FinitenessBounds(omega=omega, epsilon=None, guards=guards)

    table = intersection_numbers(g, 2)
    a1, b1, c2 = table.a[1], table.b[1], table.c[2]
    guards["a1_positive"] = a1 > 0
    epsilon = min(c2 / a1, 1 - 1e-9) if a1 > 0 else None

    counts = data.class_counts
    layer_growth = bool(all(np.all(counts[:, i + 1] * c2 <= b1 * counts[:, i]) for i in range(1, data.diameter)))
    coclique = local_coclique_bound(g, omega, a1)

    vertex_bound = valency_bound = None
    vertex_holds = valency_holds = None
    if epsilon is not None:
        ratio = 2 * omega * omega / epsilon
        vertex_bound = _log_power_bound(ratio, data.diameter, data.diameter * k)
        vertex_holds = g.n < vertex_bound
        if guards["diameter_at_least_3"]:
            valency_bound = _log_power_bound(ratio, 2 * data.diameter + 4, data.diameter ** 2)
            valency_holds = k < valency_bound

    result = FinitenessBounds(
        omega=omega,
        epsilon=epsilon,
        guards=guards,
        vertex_bound=vertex_bound,
        valency_bound=valency_bound,
        vertex_bound_holds=vertex_holds,
        valency_bound_holds=valency_holds,
        layer_growth_holds=layer_growth,
        local_coclique_holds=coclique,
    )
    if False in (vertex_holds, valency_holds, layer_growth, coclique):
        witness = {"graph6": encode_graph6(g), **result.to_dict()}
        logger.error(f"{g}: finiteness bound failed; witness {witness}")
        raise TheoremViolation("a vertex/valency/layer bound for 2-walk-regular graphs failed", witness)
    return result
