"""
Representations x -> x^ and the quotient by coinciding images.

With E = U U^T, x^ is row x of U, so <x^, y^> = E_xy and
theta x^ = sum of y^ over the neighbours y of x.
"""
from typing import List, Optional, Tuple

import numpy as np

from ..config_manager import AnalysisConfig
from ..errors import NumericalError, TheoremViolation
from ..exact_walk.intersection import intersection_numbers
from ..exact_walk.walk_counts import walk_regularity_order
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import distances, metrics
from ..models.graph import Graph
from ..models.spectral import CoverReport, Idempotent, QuotientResult, Representation
from ..utils.logging import get_logger

logger = get_logger(__name__)


def representation(g: Graph, e: Idempotent, config: Optional[AnalysisConfig] = None) -> Representation:
    """
    Raises:
        NumericalError: Some vertex violates theta x^ = sum_{y ~ x} y^ beyond tolerance
    """
    config = config or AnalysisConfig()
    vectors = e.basis
    adjacency = g.adjacency_matrix().astype(float)
    residuals = np.linalg.norm(e.theta * vectors - adjacency @ vectors, axis=1)
    norms = np.linalg.norm(vectors, axis=1)
    k = max(g.degrees()) if g.n else 0
    limits = config.residual_tol * max(1, k) * np.maximum(norms, 1.0)
    if np.any(residuals > limits):
        x = int(np.argmax(residuals - limits))
        raise NumericalError(f"{g}: eigenvector residual {residuals[x]:.3e} at vertex {x} for theta={e.theta:.12g}")
    return Representation(theta=e.theta, vectors=vectors, alpha0=float(np.mean(np.diag(e.matrix))))


def _squared_distances(e: Idempotent) -> np.ndarray:
    diagonal = np.diag(e.matrix)
    return diagonal[:, None] + diagonal[None, :] - 2 * e.matrix


def coincident_images(e: Idempotent, tol: float) -> List[Tuple[int, int, int]]:
    """Pairs x < y with x^ = y^ (sign +1) or x^ = -y^ (sign -1)."""
    diagonal = np.diag(e.matrix)
    found = []
    for sign, squared in (
        (1, _squared_distances(e)),
        (-1, diagonal[:, None] + diagonal[None, :] + 2 * e.matrix),
    ):
        for x, y in np.argwhere(np.triu(squared <= tol * tol, 1)):
            found.append((int(x), int(y), sign))
    return found


def check_coincident_images(
    g: Graph, idempotents: List[Idempotent], order: Optional[int], config: Optional[AnalysisConfig] = None
) -> int:
    """
    In a 2-walk-regular graph with k >= 3 that is not complete multipartite,
    x^ = +-y^ for theta != +-k forces dist(x, y) > 2.

    Returns:
        Number of coinciding pairs inspected
    """
    config = config or AnalysisConfig()
    info = metrics(g)
    k = info.valency
    if order is None or order < 2 or k is None or k < 3 or info.complete_multipartite:
        return 0

    dist = distances(g).dist
    inspected = 0
    for e in idempotents:
        if min(abs(e.theta - k), abs(e.theta + k)) <= 1e-6:
            continue
        tol = config.tau_id_rel * np.sqrt(e.alpha0)
        for x, y, sign in coincident_images(e, tol):
            inspected += 1
            if dist[x, y] <= 2:
                witness = {"graph6": encode_graph6(g), "theta": e.theta, "x": x, "y": y, "sign": sign}
                logger.error(f"{g}: images coincide at distance {dist[x, y]}; witness {witness}")
                raise TheoremViolation("x^ = +-y^ for two vertices at distance at most 2", witness)
    return inspected


def cover_prediction(g: Graph, e: Idempotent, config: Optional[AnalysisConfig] = None) -> Optional[Tuple[float, Tuple[int, int]]]:
    """
    For a rank-2 idempotent of a 1-walk-regular graph: the predicted number
    s = (k/2)(1 - a_1/(theta + k)) of neighbours z of y at distance 2 from x
    with cosine 2 u_1^2 - 1, and the measured (min, max) over all arcs xy.
    """
    config = config or AnalysisConfig()
    k = g.valency()
    order = walk_regularity_order(g)
    if e.rank != 2 or k is None or order is None or order < 1 or distances(g).diameter < 2:
        return None

    a1 = intersection_numbers(g, 1).a[1]
    predicted = (k / 2) * (1 - a1 / (e.theta + k))
    u1 = e.theta / k
    target = 2 * u1 * u1 - 1
    cosines = e.matrix / e.alpha0
    dist = distances(g).dist

    counts = []
    for x in range(g.n):
        for y in g.adjacency[x]:
            counts.append(
                sum(1 for z in g.adjacency[y] if dist[x, z] == 2 and abs(cosines[x, z] - target) <= config.tau_id_rel)
            )
    measured = (min(counts), max(counts))
    logger.debug(f"{g}: rank-2 theta={e.theta:.6g} predicted s={predicted:.6g}, measured {measured}")
    return predicted, measured


def _check_equivalence(related: np.ndarray) -> None:
    for x in range(related.shape[0]):
        members = np.flatnonzero(related[x])
        for y in members:
            if not np.array_equal(related[y], related[x]):
                z = int(np.flatnonzero(related[y] != related[x])[0])
                raise NumericalError(
                    f"Identification is not transitive: ({x}, {int(y)}, {z}) with "
                    f"{x}~{int(y)}, but {z} related to only one of them"
                )


def representation_quotient(g: Graph, e: Idempotent, config: Optional[AnalysisConfig] = None) -> QuotientResult:
    """
    Identify vertices with equal images and describe the resulting folding.

    Raises:
        NumericalError: The identification within tau_id is not an equivalence relation
    """
    config = config or AnalysisConfig()
    tol = config.tau_id_rel * np.sqrt(max(e.alpha0, 0.0))
    related = _squared_distances(e) <= tol * tol
    _check_equivalence(related)

    labels = np.full(g.n, -1, dtype=np.int64)
    classes: List[Tuple[int, ...]] = []
    for x in range(g.n):
        if labels[x] < 0:
            members = np.flatnonzero(related[x])
            labels[members] = len(classes)
            classes.append(tuple(int(v) for v in members))

    q = len(classes)
    quotient_edges = {(int(labels[u]), int(labels[v])) for u, v in g.edges if labels[u] != labels[v]}
    independent = all(labels[u] != labels[v] for u, v in g.edges)

    quotient = Graph.from_edges(q, quotient_edges, name=f"quotient({g.name or 'graph'},{e.theta:.6g})")

    membership = np.zeros((g.n, q), dtype=np.int64)
    membership[np.arange(g.n), labels] = 1
    counts = g.adjacency_matrix() @ membership
    equitable = all(np.all(counts[list(members)] == counts[members[0]]) for members in classes)
    equal_sizes = len({len(members) for members in classes}) == 1

    degrees = tuple(quotient.degrees())
    is_cycle = q >= 3 and set(degrees) == {2} and distances(quotient).connected

    prediction = None
    if distances(g).connected and g.is_regular():
        prediction = cover_prediction(g, e, config)
    cover = CoverReport(
        classes_independent=independent,
        equitable=equitable,
        equal_sizes=equal_sizes,
        quotient_degrees=degrees,
        quotient_is_cycle=is_cycle,
        predicted_s=prediction[0] if prediction else None,
        measured_s=prediction[1] if prediction else None,
    )
    logger.info(f"{g}: quotient for theta={e.theta:.6g} has {q} classes; cover={cover.is_cover}")
    return QuotientResult(partition=tuple(classes), quotient=quotient, cover=cover)
