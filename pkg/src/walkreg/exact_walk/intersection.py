"""
Intersection numbers and triple numbers by direct counting.

For dist(x, y) = j:
    c_j = |Γ(y) ∩ Γ_{j-1}(x)|, a_j = |Γ(y) ∩ Γ_j(x)|, b_j = |Γ(y) ∩ Γ_{j+1}(x)|
and for dist(x, y) = h, p^h_ij = |Γ_i(x) ∩ Γ_j(y)|. Every count is read off an
integer matrix product and must be constant over its distance class.
"""
from typing import Dict, Optional, Tuple

import numpy as np

from ..errors import ConstancyError, PreconditionError, TheoremViolation
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import distance_matrix, distances, neighbour_counts
from ..models.graph import Graph
from ..models.walk import (
    DistanceRegularity,
    IntersectionArray,
    IntersectionTable,
    TripleKey,
    WalkRegularityReport,
)
from ..utils.logging import get_logger
from .walk_counts import first_disagreement, require_connected_regular, walk_regularity, walk_table

logger = get_logger(__name__)


def _constant(matrix: np.ndarray, mask: np.ndarray, label: str, distance: int) -> int:
    found = first_disagreement(matrix, mask)
    if found is not None:
        first, second, v1, v2 = found
        raise ConstancyError(
            f"{label} is not constant at distance {distance}: {first} gives {v1}, {second} gives {v2}",
            distance=distance,
            witness=first + second,
            values=(v1, v2),
        )
    values = matrix[mask]
    return int(values[0]) if values.size else 0


def _check_range(g: Graph, t: int) -> None:
    diameter = distances(g).diameter
    if not 0 <= t <= diameter:
        raise PreconditionError(f"t={t} outside 0..{diameter} for {g}")


def _check_order(g: Graph, t: int) -> None:
    """Counting succeeded, but t must still be within the walk-regularity order."""
    order, obstruction = walk_regularity(g)
    if order is None or t > order:
        raise ConstancyError(
            f"{g} is only {order}-walk-regular, t={t} requested: "
            f"{obstruction.length}-walks differ at distance {obstruction.distance}",
            distance=obstruction.distance,
            witness=obstruction.first + obstruction.second,
            values=obstruction.counts,
        )


def intersection_numbers(g: Graph, t: int) -> IntersectionTable:
    """
    a_j, b_j, c_j and k_j for 0 <= j <= t.

    Raises:
        PreconditionError: Disconnected or irregular graph, or t outside 0..D
        ConstancyError: A count varies over its distance class, or t exceeds the walk-regularity order
    """
    require_connected_regular(g)
    _check_range(g, t)

    data = distances(g)
    a, b, c, ks = [], [], [], []
    for j in range(t + 1):
        mask = data.dist == j
        c.append(_constant(neighbour_counts(g, j - 1), mask, "c", j) if j > 0 else 0)
        a.append(_constant(neighbour_counts(g, j), mask, "a", j))
        b.append(_constant(neighbour_counts(g, j + 1), mask, "b", j))
        sizes = data.class_counts[:, j]
        if np.any(sizes != sizes[0]):
            x = int(np.flatnonzero(sizes != sizes[0])[0])
            raise ConstancyError(f"k_{j} is not constant: |Γ_{j}(0)|={sizes[0]}, |Γ_{j}({x})|={sizes[x]}", j, (0, x))
        ks.append(int(sizes[0]))

    _check_order(g, t)
    table = IntersectionTable(t=t, a=tuple(a), b=tuple(b), c=tuple(c), k=tuple(ks))
    logger.debug(f"{g}: intersection numbers {table.to_dict()}")
    return table


def triple_numbers(g: Graph, t: int) -> Dict[TripleKey, int]:
    """
    p^h_ij for h, i, j <= t, keyed (h, i, j) with i <= j.

    Raises:
        ConstancyError: A count varies over its distance class, or t exceeds the walk-regularity order
    """
    require_connected_regular(g)
    _check_range(g, t)

    data = distances(g)
    masks = [data.dist == h for h in range(t + 1)]
    numbers: Dict[TripleKey, int] = {}
    for i in range(t + 1):
        for j in range(i, t + 1):
            product = distance_matrix(g, i) @ distance_matrix(g, j)
            for h, mask in enumerate(masks):
                numbers[(h, i, j)] = _constant(product, mask, f"p^{h}_{i}{j}", h)

    _check_order(g, t)
    return numbers


def is_distance_regular(g: Graph) -> DistanceRegularity:
    """
    Direct test: a_j, b_j, c_j constant for every j <= D.

    Disconnected or irregular graphs are simply not distance-regular.
    """
    if g.n == 0 or not distances(g).connected or not g.is_regular():
        return DistanceRegularity(False)

    data = distances(g)
    bs, cs = [], []
    for j in range(data.diameter + 1):
        mask = data.dist == j
        counts = [neighbour_counts(g, j - 1), neighbour_counts(g, j), neighbour_counts(g, j + 1)]
        if any(first_disagreement(m, mask) is not None for m in counts):
            logger.debug(f"{g}: intersection numbers vary at distance {j}")
            return DistanceRegularity(False)
        c_j, _, b_j = (int(m[mask][0]) for m in counts)
        if j > 0:
            cs.append(c_j)
        if j < data.diameter:
            bs.append(b_j)

    return DistanceRegularity(True, IntersectionArray(b=tuple(bs), c=tuple(cs)))


def check_b_one_forces_distance_regular(report: WalkRegularityReport, g: Graph) -> None:
    """If the order t is below D and b_t = 1, the graph has to be distance-regular."""
    t = report.order
    if t is None or t >= report.diameter or report.intersection is None:
        return
    if report.intersection.b[t] == 1 and not report.distance_regular:
        _violation(g, f"b_{t} = 1 at order {t} < D but the graph is not distance-regular", {"t": t})


def distance_two_identity(g: Graph, table: IntersectionTable) -> bool:
    """For a 2-walk-regular graph: c_2 A_2 = A^2 - a_1 A - k I."""
    if table.t < 2:
        raise PreconditionError("distance-2 identity needs intersection numbers up to 2")
    adjacency = g.adjacency_matrix()
    lhs = table.c[2] * distance_matrix(g, 2)
    rhs = adjacency @ adjacency - table.a[1] * adjacency - table.valency * np.eye(g.n, dtype=np.int64)
    return bool(np.array_equal(lhs, rhs))


def _violation(g: Graph, message: str, witness: Dict) -> None:
    witness = {"graph6": encode_graph6(g), **witness}
    logger.error(f"{g}: {message}; witness {witness}")
    raise TheoremViolation(message, witness)


def _check_report(g: Graph, report: WalkRegularityReport) -> None:
    table = report.intersection
    if (report.order == report.diameter) != report.distance_regular:
        _violation(g, f"order {report.order} vs D={report.diameter} disagrees with distance-regularity", {})
    if table is None:
        return

    k = table.valency
    for j in range(table.t + 1):
        if table.a[j] + table.b[j] + table.c[j] != k:
            _violation(g, f"a_{j} + b_{j} + c_{j} != k", {"j": j, **table.to_dict()})
    if table.t >= 1 and table.c[1] != 1:
        _violation(g, "c_1 != 1", table.to_dict())
    for i in range(table.t + 1):
        for j in range(i):
            if table.b[i] > table.b[j]:
                _violation(g, f"b_{i} > b_{j}", {"i": i, "j": j, **table.to_dict()})

    for (h, i, j), value in report.triple_numbers.items():
        if max(h, i, j) <= table.t and table.k[h] * value != table.k[i] * report.triple(i, h, j):
            _violation(g, f"k_h p^h_ij != k_i p^i_hj for (h,i,j)=({h},{i},{j})", {"h": h, "i": i, "j": j})

    check_b_one_forces_distance_regular(report, g)


def walk_regularity_report(g: Graph) -> WalkRegularityReport:
    """
    Run the whole exact engine: order, d, intersection and triple numbers,
    distance-regularity, with all structural identities asserted.

    Raises:
        PreconditionError: Disconnected or irregular graph
        TheoremViolation: An identity that always holds failed
    """
    require_connected_regular(g)
    order, obstruction = walk_regularity(g)
    dr = is_distance_regular(g)

    table: Optional[IntersectionTable] = None
    triples: Dict[Tuple[int, int, int], int] = {}
    if order is not None:
        table = intersection_numbers(g, order)
        triples = triple_numbers(g, order)

    report = WalkRegularityReport(
        order=order,
        d=walk_table(g).d,
        diameter=distances(g).diameter,
        intersection=table,
        triple_numbers=triples,
        distance_regular=dr.distance_regular,
        intersection_array=dr.intersection_array,
        obstruction=obstruction,
    )
    _check_report(g, report)
    return report
