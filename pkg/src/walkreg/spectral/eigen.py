"""
Spectrum and minimal idempotents from a dense symmetric eigensolver.

Eigenvalues are grouped into clusters whose inner gaps are at most tau and
whose outer gaps exceed tau. A gap in (tau, 10 tau] cannot be classified with
confidence and is an error; so is a cluster count that disagrees with the
exact minimal-polynomial degree.
"""
from typing import List, Optional, Tuple

import numpy as np
from scipy import linalg

from ..config_manager import AnalysisConfig
from ..errors import NumericalError, PreconditionError
from ..exact_walk.walk_counts import minimal_poly_degree
from ..graph_core.structure import distances
from ..models.graph import Graph
from ..models.spectral import Idempotent, Spectrum
from ..utils.logging import get_logger

logger = get_logger(__name__)


def eigendecomposition(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in decreasing order and the matching orthonormal eigenvectors (columns)."""

    def build() -> Tuple[np.ndarray, np.ndarray]:
        values, vectors = linalg.eigh(g.adjacency_matrix().astype(float))
        order = np.argsort(-values, kind="stable")
        return values[order], vectors[:, order]

    return g.cached("eigendecomposition", build)


def spectrum(g: Graph, tau_group: Optional[float] = None, config: Optional[AnalysisConfig] = None) -> Spectrum:
    """
    Distinct adjacency eigenvalues with multiplicities.

    Args:
        tau_group: Absolute grouping tolerance; defaults to tau_group_rel * max(1, ||A||_2)

    Raises:
        NumericalError: Ambiguous gap, or cluster count differs from the exact d + 1
    """
    if g.n == 0:
        raise PreconditionError("spectrum of the empty graph")
    config = config or AnalysisConfig()
    values, _ = eigendecomposition(g)
    norm = float(np.max(np.abs(values)))
    tau = tau_group if tau_group is not None else config.tau_group_rel * max(1.0, norm)
    if tau <= 0:
        raise PreconditionError(f"tau_group must be positive, got {tau}")

    gaps = values[:-1] - values[1:]
    ambiguous = np.flatnonzero((gaps > tau) & (gaps <= 10 * tau))
    if ambiguous.size:
        i = int(ambiguous[0])
        raise NumericalError(
            f"Ambiguous eigenvalue gap {gaps[i]:.3e} between {values[i]:.12g} and {values[i + 1]:.12g} (tau={tau:.3e})"
        )

    clusters: List[List[int]] = [[0]]
    for i, gap in enumerate(gaps):
        if gap > tau:
            clusters.append([])
        clusters[-1].append(i + 1)

    result = Spectrum(
        values=tuple(float(np.mean(values[c])) for c in clusters),
        multiplicities=tuple(len(c) for c in clusters),
        tau=tau,
        clusters=tuple(tuple(c) for c in clusters),
    )

    if distances(g).connected:
        d = minimal_poly_degree(g)
        if result.d != d:
            raise NumericalError(f"{g}: {result.d + 1} eigenvalue clusters but the minimal polynomial has degree {d + 1}")

    logger.debug(f"{g}: spectrum {result}, smallest outer gap {gaps[gaps > tau].min() if np.any(gaps > tau) else None}")
    return result


def _class_profile(
    matrix: np.ndarray, dist: np.ndarray, diameter: int, tol: float
) -> Tuple[Tuple[float, ...], Tuple[bool, ...], Tuple[Optional[Tuple[int, int]], ...]]:
    alphas, flags, witnesses = [], [], []
    for j in range(diameter + 1):
        mask = dist == j
        entries = matrix[mask]
        mean = float(entries.mean())
        deviation = np.abs(entries - mean)
        worst = int(np.argmax(deviation))
        constant = bool(deviation[worst] <= tol)
        alphas.append(mean)
        flags.append(constant)
        if constant:
            witnesses.append(None)
        else:
            x, y = np.argwhere(mask)[worst]
            witnesses.append((int(x), int(y)))
    return tuple(alphas), tuple(flags), tuple(witnesses)


def minimal_idempotents(g: Graph, s: Spectrum, config: Optional[AnalysisConfig] = None) -> List[Idempotent]:
    """
    One projector E = U U^T per distinct eigenvalue, in the order of s.

    Raises:
        NumericalError: E^2 != E, AE != theta E, sum E != I or sum theta E != A beyond tolerance
    """
    config = config or AnalysisConfig()
    _, vectors = eigendecomposition(g)
    data = distances(g)
    adjacency = g.adjacency_matrix().astype(float)
    residual = config.residual_tol * max(1, g.n)

    idempotents: List[Idempotent] = []
    total = np.zeros((g.n, g.n))
    weighted = np.zeros((g.n, g.n))
    for theta, cluster in zip(s.values, s.clusters):
        basis = vectors[:, list(cluster)]
        matrix = basis @ basis.T
        for label, err in (
            ("E^2 - E", np.abs(matrix @ matrix - matrix).max()),
            ("AE - theta E", np.abs(adjacency @ matrix - theta * matrix).max()),
        ):
            if err > residual:
                raise NumericalError(f"{g}: residual {label} = {err:.3e} for theta={theta:.12g}")
        total += matrix
        weighted += theta * matrix

        tol = config.tau_const_rel * len(cluster) / g.n
        alphas, flags, witnesses = _class_profile(matrix, data.dist, data.diameter, tol)
        idempotents.append(
            Idempotent(
                theta=theta,
                rank=len(cluster),
                matrix=matrix,
                basis=basis,
                alphas=alphas,
                constant=flags,
                witnesses=witnesses,
            )
        )

    if np.abs(total - np.eye(g.n)).max() > residual or np.abs(weighted - adjacency).max() > residual:
        raise NumericalError(f"{g}: idempotents do not resolve the identity and A")
    return idempotents
