"""
Clique enumeration and the Delsarte clique bound.

In a graph with a 1-walk-regular idempotent E for theta < 0 every clique has
at most 1 - k/theta vertices, with equality exactly when E chi = 0 for its
characteristic vector chi. Such cliques are Delsarte cliques.
"""
import math
from typing import Any, Dict, Iterable, List, Optional, Sequence

import networkx as nx
import numpy as np

from ..config_manager import AnalysisConfig
from ..errors import BudgetExceeded, ConstancyError, PreconditionError, TheoremViolation
from ..exact_walk.walk_counts import require_connected_regular, walk_regularity_order, walk_table
from ..graph_core.graph_io import encode_graph6, to_networkx
from ..graph_core.structure import distances
from ..models.geometry import Clique, CliqueProfile, CliqueSet, DelsarteBound
from ..models.graph import Graph
from ..models.spectral import Idempotent
from ..spectral.eigen import minimal_idempotents, spectrum
from ..utils.logging import get_logger

logger = get_logger(__name__)


def maximal_cliques(g: Graph, cap: Optional[int] = None) -> CliqueSet:
    """
    All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in lexicographic order.

    Raises:
        BudgetExceeded: More than cap maximal cliques
    """
    cap = cap if cap is not None else AnalysisConfig().clique_cap

    def build() -> CliqueSet:
        found: List[Clique] = []
        for clique in nx.find_cliques(to_networkx(g)):
            found.append(tuple(sorted(clique)))
            if len(found) > cap:
                raise BudgetExceeded(f"{g} has more than {cap} maximal cliques")
        logger.debug(f"{g}: {len(found)} maximal cliques")
        return CliqueSet(cliques=tuple(sorted(found)), maximal=True)

    return g.cached(f"maximal_cliques:{cap}", build)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    members = sorted(set(vertices))
    return all(g.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1:])


def delsarte_bound(k: int, theta_d: float, tol: float = 1e-6) -> DelsarteBound:
    """
    1 - k/theta_d, with the nearest integer when the bound is within tol of one.

    Raises:
        PreconditionError: theta_d >= 0
    """
    if theta_d >= 0:
        raise PreconditionError(f"Delsarte bound needs a negative eigenvalue, got {theta_d}")
    bound = 1 - k / theta_d
    nearest = round(bound)
    return DelsarteBound(bound=bound, integer_candidate=int(nearest) if abs(bound - nearest) <= tol else None)


def smallest_idempotent(g: Graph, config: Optional[AnalysisConfig] = None) -> Idempotent:
    """Idempotent of the smallest adjacency eigenvalue."""
    config = config or AnalysisConfig()
    return minimal_idempotents(g, spectrum(g, config=config), config)[-1]


def is_delsarte_clique(g: Graph, e_min: Idempotent, c: Sequence[int], config: Optional[AnalysisConfig] = None) -> bool:
    """
    True when E chi = 0 within delsarte_chi_tol * sqrt(|C|).

    Raises:
        PreconditionError: c is not a clique
    """
    config = config or AnalysisConfig()
    members = sorted(set(c))
    if not members or not is_clique(g, members):
        raise PreconditionError(f"{members} is not a clique of {g}")
    chi = np.zeros(g.n)
    chi[members] = 1.0
    return bool(np.linalg.norm(e_min.matrix @ chi) <= config.delsarte_chi_tol * math.sqrt(len(members)))


def clique_rank_check(g: Graph, idempotents: List[Idempotent], cliques: CliqueSet) -> List[Dict[str, Any]]:
    """
    Every clique of a 1-walk-regular graph has at most m + 1 vertices, m the
    rank of any idempotent for theta != k.

    Returns:
        One record per idempotent with the clique number and whether the bound is tight

    Raises:
        PreconditionError: g is not 1-walk-regular
        TheoremViolation: Some clique exceeds m + 1
    """
    k = require_connected_regular(g)
    order = walk_regularity_order(g)
    if order is None or order < 1:
        raise PreconditionError(f"clique rank bound needs a 1-walk-regular graph; {g} has order {order}")

    omega = cliques.clique_number
    records = []
    for e in idempotents:
        if abs(e.theta - k) <= 1e-6:
            continue
        if omega > e.rank + 1:
            witness = {"graph6": encode_graph6(g), "theta": e.theta, "rank": e.rank, "clique_number": omega}
            logger.error(f"{g}: clique of size {omega} exceeds rank bound; witness {witness}")
            raise TheoremViolation(f"clique of size {omega} > m + 1 = {e.rank + 1}", witness)
        records.append({"theta": e.theta, "rank": e.rank, "clique_number": omega, "tight": omega == e.rank + 1})
    return records


def phi_prediction(idempotent: Idempotent, size: int, t: int) -> List[Optional[float]]:
    """phi_i = -c alpha_{i+1} / (alpha_i - alpha_{i+1}) for i < t, from E chi = 0."""
    predicted: List[Optional[float]] = []
    for i in range(t):
        if i + 1 >= len(idempotent.alphas):
            predicted.append(None)
            continue
        a_i, a_next = idempotent.alphas[i], idempotent.alphas[i + 1]
        predicted.append(None if abs(a_i - a_next) < 1e-12 else -size * a_next / (a_i - a_next))
    return predicted


def clique_profile(
    g: Graph, c: Sequence[int], t: int, e_min: Optional[Idempotent] = None
) -> CliqueProfile:
    """
    Covering radius of a Delsarte clique and its phi_i for i < t.

    The covering radius is at most d - 1.

    Raises:
        PreconditionError: c is not a clique, or t exceeds the walk-regularity order
        ConstancyError: phi_i varies for some i < t
        TheoremViolation: Covering radius above d - 1
    """
    require_connected_regular(g)
    members = sorted(set(c))
    if not members or not is_clique(g, members):
        raise PreconditionError(f"{members} is not a clique of {g}")
    order = walk_regularity_order(g)
    if order is None or t > order:
        raise PreconditionError(f"t={t} exceeds the walk-regularity order {order}")

    dist = distances(g).dist
    to_clique = dist[:, members]
    nearest = to_clique.min(axis=1)
    radius = int(nearest.max())

    d = walk_table(g).d
    if radius > d - 1:
        witness = {"graph6": encode_graph6(g), "clique": members, "covering_radius": radius, "d": d}
        logger.error(f"{g}: covering radius {radius} > d - 1 = {d - 1}; witness {witness}")
        raise TheoremViolation("covering radius of a Delsarte clique exceeds d - 1", witness)

    phi: List[Optional[int]] = []
    for i in range(t):
        layer = np.flatnonzero(nearest == i)
        if layer.size == 0:
            phi.append(None)
            continue
        exact = (to_clique[layer] == i).sum(axis=1)
        if np.any(exact != exact[0]):
            bad = int(layer[np.flatnonzero(exact != exact[0])[0]])
            raise ConstancyError(
                f"phi_{i} varies: vertex {int(layer[0])} sees {exact[0]}, vertex {bad} sees "
                f"{exact[np.flatnonzero(exact != exact[0])[0]]}",
                distance=i,
                witness=(int(layer[0]), bad),
            )
        phi.append(int(exact[0]))

    predicted = tuple(phi_prediction(e_min, len(members), t)) if e_min is not None else ()
    profile = CliqueProfile(covering_radius=radius, phi=tuple(phi), phi_predicted=predicted)
    logger.debug(f"{g}: clique {members} profile {profile.to_dict()}")
    return profile
