"""
Exact walk counts.

The number of l-walks from x to y is (A^l)[x, y]. A graph is t-walk-regular
when these counts depend only on dist(x, y) for every l, on every class up to
distance t. Because A^l is a combination of the d+1 minimal idempotents and
the Vandermonde system in the eigenvalues is invertible, it is enough to look
at l = 0..d.
"""
from typing import List, Optional, Tuple

import numpy as np

from ..errors import PreconditionError
from ..graph_core.structure import distances
from ..models.graph import Graph
from ..models.walk import WalkObstruction, WalkTable
from ..utils.logging import get_logger
from .exact_linalg import exact_product, exact_rank, frobenius

logger = get_logger(__name__)


def require_connected(g: Graph) -> None:
    if g.n == 0 or not distances(g).connected:
        raise PreconditionError(f"{g} is not connected")


def require_connected_regular(g: Graph) -> int:
    """Return the valency, raising PreconditionError for disconnected or irregular graphs."""
    require_connected(g)
    k = g.valency()
    if k is None:
        raise PreconditionError(f"{g} is not regular (degrees {sorted(set(g.degrees()))})")
    return k


def walk_table(g: Graph) -> WalkTable:
    """
    Powers A^0 .. A^d with d + 1 the degree of the minimal polynomial.

    {I, A, ..., A^m} is independent exactly when its Gram matrix, the Hankel
    matrix of traces tr(A^(i+j)), is non-singular. The traces come for free
    from the powers: tr(A^(2l)) = <A^l, A^l> and tr(A^(2l-1)) = <A^l, A^(l-1)>.
    """
    require_connected(g)

    def build() -> WalkTable:
        adjacency = g.adjacency_matrix()
        k = max(g.degrees())
        powers: List[np.ndarray] = [np.eye(g.n, dtype=np.int64)]
        traces: List[int] = [g.n]

        m = 0
        while True:
            m += 1
            following = exact_product(adjacency, powers[-1], k ** m)
            traces.append(frobenius(following, powers[-1]))
            traces.append(frobenius(following, following))
            hankel = [[traces[i + j] for j in range(m + 1)] for i in range(m + 1)]
            if exact_rank(hankel) <= m:
                break
            powers.append(following)
            logger.debug(f"{g}: A^{m} independent of lower powers")

        d = m - 1
        for power in powers:
            power.setflags(write=False)
        logger.debug(f"{g}: minimal polynomial has degree {d + 1}")
        return WalkTable(powers=tuple(powers), d=d, traces=tuple(traces[: 2 * d + 1]))

    return g.cached("walk_table", build)


def minimal_poly_degree(g: Graph) -> int:
    """d = (number of distinct adjacency eigenvalues) - 1, computed exactly."""
    return walk_table(g).d


def first_disagreement(matrix: np.ndarray, mask: np.ndarray) -> Optional[Tuple[Tuple[int, int], Tuple[int, int], int, int]]:
    """First pair inside mask whose entry differs from the first masked entry, or None."""
    values = matrix[mask]
    if values.size == 0:
        return None
    bad = np.flatnonzero(np.asarray(values != values[0], dtype=bool))
    if bad.size == 0:
        return None
    pairs = np.argwhere(mask)
    first, second = pairs[0], pairs[bad[0]]
    return (
        (int(first[0]), int(first[1])),
        (int(second[0]), int(second[1])),
        int(values[0]),
        int(values[bad[0]]),
    )


def walk_regularity(g: Graph) -> Tuple[Optional[int], Optional[WalkObstruction]]:
    """Order together with the walk-count witness that stops it (None at the diameter)."""
    require_connected_regular(g)

    def build() -> Tuple[Optional[int], Optional[WalkObstruction]]:
        data = distances(g)
        table = walk_table(g)
        for j in range(data.diameter + 1):
            mask = data.dist == j
            for l, power in enumerate(table.powers):
                found = first_disagreement(power, mask)
                if found is None:
                    continue
                first, second, v1, v2 = found
                obstruction = WalkObstruction(distance=j, length=l, first=first, second=second, counts=(v1, v2))
                order = j - 1 if j > 0 else None
                logger.info(
                    f"{g}: walk-regularity order {order}; "
                    f"{l}-walks {first}->{v1}, {second}->{v2} at distance {j}"
                )
                return order, obstruction
        logger.info(f"{g}: walk-regularity order {data.diameter} (diameter)")
        return data.diameter, None

    return g.cached("walk_regularity", build)


def walk_regularity_order(g: Graph) -> Optional[int]:
    """
    Largest t such that walk counts depend only on distance up to t.

    Returns None when even closed walk counts vary (the graph is not walk-regular).

    Raises:
        PreconditionError: Disconnected or non-regular input
    """
    return walk_regularity(g)[0]
