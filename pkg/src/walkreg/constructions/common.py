"""Shared helpers for constructions: spectrum bookkeeping, guarantees and strongly regular parameters."""
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..errors import PreconditionError, TheoremViolation
from ..exact_walk.walk_counts import walk_regularity_order
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import distances
from ..models.construction import ConstructionResult, SpectrumPairs
from ..models.graph import Graph
from ..spectral.eigen import spectrum
from ..utils.logging import get_logger

logger = get_logger(__name__)

# Predicted eigenvalues closer than this are one eigenvalue
MERGE_TOL = 1e-6


def merge_spectrum(pairs: Iterable[Tuple[float, int]]) -> SpectrumPairs:
    """Sort (value, multiplicity) pairs decreasingly, merging near-equal values and dropping zero multiplicities."""
    merged: List[List] = []
    for value, mult in sorted(((float(v), int(m)) for v, m in pairs if m > 0), reverse=True):
        if merged and abs(merged[-1][0] - value) <= MERGE_TOL:
            merged[-1][1] += mult
        else:
            merged.append([value, mult])
    return tuple((value, mult) for value, mult in merged)


def input_spectrum(g: Graph) -> SpectrumPairs:
    return tuple(spectrum(g).pairs())


def spectra_match(predicted: SpectrumPairs, actual: SpectrumPairs, tol: float = 1e-8) -> bool:
    if len(predicted) != len(actual):
        return False
    return all(m1 == m2 and abs(v1 - v2) <= tol * max(1.0, abs(v1)) for (v1, m1), (v2, m2) in zip(predicted, actual))


def is_connected_graph(g: Graph) -> bool:
    return g.n > 0 and distances(g).connected


def order_or_none(g: Graph) -> Optional[int]:
    """Walk-regularity order for connected regular graphs, None otherwise."""
    if not is_connected_graph(g) or not g.is_regular():
        return None
    return walk_regularity_order(g)


def require_walk_regular_at_least(g: Graph, t: int, label: str) -> int:
    order = order_or_none(g)
    if order is None or order < t:
        raise PreconditionError(f"{label} needs a connected {t}-walk-regular graph; {g} has order {order}")
    return order


def verify_guarantee(result: ConstructionResult) -> Optional[int]:
    """
    Compare the guaranteed order with the exact one.

    Returns:
        The exact order of the output (None when disconnected, irregular or not walk-regular)

    Raises:
        TheoremViolation: The output is less walk-regular than guaranteed
    """
    actual = order_or_none(result.graph)
    if result.guaranteed_order is not None and (actual is None or actual < result.guaranteed_order):
        witness = {"graph6": encode_graph6(result.graph), "guaranteed": result.guaranteed_order, "actual": actual}
        logger.error(f"{result.construction}: guaranteed order not reached; witness {witness}")
        raise TheoremViolation(f"{result.construction} output has order {actual} < {result.guaranteed_order}", witness)
    return actual


def strongly_regular_parameters(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """(n, k, lambda, mu) of a connected strongly regular graph of diameter 2, else None."""
    if not is_connected_graph(g) or not g.is_regular() or distances(g).diameter != 2:
        return None
    adjacency = g.adjacency_matrix()
    squared = adjacency @ adjacency
    off_diagonal = ~np.eye(g.n, dtype=bool)
    on_edges = squared[(adjacency == 1)]
    on_non_edges = squared[(adjacency == 0) & off_diagonal]
    if np.any(on_edges != on_edges[0]) or np.any(on_non_edges != on_non_edges[0]):
        return None
    return g.n, g.valency(), int(on_edges[0]), int(on_non_edges[0])
