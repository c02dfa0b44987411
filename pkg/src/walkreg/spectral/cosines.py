"""
Cosine sequences and the idempotent route to walk-regularity.

A graph is t-walk-regular exactly when every minimal idempotent is constant on
each distance class up to t. For such an idempotent with alphas a_0..a_t the
cosines u_j = a_j / a_0 satisfy k u_1 = theta and
c_j u_{j-1} + a_j u_j + b_j u_{j+1} = theta u_j.
"""
from typing import List, Optional, Tuple

from ..config_manager import AnalysisConfig
from ..errors import ConstancyError, NumericalError, OracleDisagreement, PreconditionError, TheoremViolation
from ..exact_walk.intersection import intersection_numbers
from ..exact_walk.walk_counts import require_connected_regular, walk_regularity_order
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import distances, metrics
from ..models.graph import Graph
from ..models.spectral import Idempotent
from ..utils.logging import get_logger
from .eigen import minimal_idempotents, spectrum

logger = get_logger(__name__)


def cosine_sequence(
    g: Graph, e: Idempotent, t: int, config: Optional[AnalysisConfig] = None
) -> Tuple[float, ...]:
    """
    u_0 .. u_t for an idempotent constant on the classes up to distance t.

    Raises:
        ConstancyError: E varies on some class j <= t
        NumericalError: u_1 != theta/k or the three-term recurrence fails
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    diameter = distances(g).diameter
    if not 0 <= t <= diameter:
        raise PreconditionError(f"t={t} outside 0..{diameter}")

    for j in range(t + 1):
        if not e.constant[j]:
            raise ConstancyError(
                f"Idempotent for theta={e.theta:.12g} is not constant at distance {j}",
                distance=j,
                witness=e.witnesses[j] or (),
            )

    alpha0 = e.alpha0
    u = tuple(alpha / alpha0 for alpha in e.alphas[: t + 1])

    if t >= 1 and abs(k * u[1] - e.theta) > 1e-9 * max(1.0, abs(e.theta), k):
        raise NumericalError(f"u_1 = {u[1]:.12g} but theta/k = {e.theta / k:.12g}")

    order = walk_regularity_order(g)
    top = min(t - 1, order if order is not None else -1)
    if top >= 1:
        table = intersection_numbers(g, top)
        for j in range(1, top + 1):
            residual = table.c[j] * u[j - 1] + table.a[j] * u[j] + table.b[j] * u[j + 1] - e.theta * u[j]
            if abs(residual) > config.residual_tol * max(1, k):
                raise NumericalError(f"Three-term recurrence fails at j={j}: residual {residual:.3e}")
    return u


def spectral_wr_order(g: Graph, config: Optional[AnalysisConfig] = None) -> Optional[int]:
    """
    Walk-regularity order from idempotent constancy, cross-checked against the exact engine.

    Raises:
        PreconditionError: Disconnected or non-regular input
        OracleDisagreement: The two routes give different orders
    """
    config = config or AnalysisConfig()
    require_connected_regular(g)
    idempotents = minimal_idempotents(g, spectrum(g, config=config), config)
    order = idempotent_order(idempotents)

    exact = walk_regularity_order(g)
    if order != exact:
        raise OracleDisagreement(f"{g}: spectral order {order} but exact order {exact}")
    logger.debug(f"{g}: spectral and exact orders agree at {order}")
    return order


def idempotent_order(idempotents: List[Idempotent]) -> Optional[int]:
    """Minimum of the per-idempotent orders (None if any diagonal varies)."""
    orders = [e.order() for e in idempotents]
    if any(o is None for o in orders):
        return None
    return min(orders)


def u2_extremes(
    g: Graph, idempotents: List[Idempotent], order: Optional[int], tol: float = 1e-6
) -> List[Tuple[float, float]]:
    """
    Eigenvalues theta != k with u_2 = +-1, checked against what they force.

    For a 2-walk-regular graph with k >= 3 that is not complete multipartite,
    u_2 = +-1 only happens for theta = -k in a bipartite graph.

    Returns:
        (theta, u_2) for every idempotent with |u_2| = 1
    """
    k = require_connected_regular(g)
    info = metrics(g)
    if order is None or order < 2 or k < 3 or info.complete_multipartite:
        return []

    extremes = []
    for e in idempotents:
        if abs(e.theta - k) <= tol:
            continue
        u2 = e.alphas[2] / e.alpha0
        if abs(abs(u2) - 1) <= tol:
            extremes.append((e.theta, u2))
            if abs(e.theta + k) > tol or not info.bipartite:
                witness = {"graph6": encode_graph6(g), "theta": e.theta, "u2": u2}
                logger.error(f"{g}: u_2 = {u2:.6g} for theta = {e.theta:.6g}; witness {witness}")
                raise TheoremViolation("u_2 = +-1 for an eigenvalue other than -k of a bipartite graph", witness)
    return extremes
