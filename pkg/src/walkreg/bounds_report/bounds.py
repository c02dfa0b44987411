"""
Eigenvalue bounds and small-multiplicity classifications as executable checks.

Each check returns records with their guards evaluated. When the guards of a
proven statement hold and the statement fails on the graph, the check raises
TheoremViolation with a witness instead of returning a failed record.
"""
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy import linalg

from ..config_manager import AnalysisConfig
from ..errors import TheoremViolation
from ..exact_walk.intersection import intersection_numbers
from ..exact_walk.walk_counts import require_connected_regular
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import distances, local_graph, metrics
from ..models.graph import Graph
from ..models.report import (
    FundamentalRecord,
    GodsilRecord,
    LocalMultiplicityRecord,
    MultiplicityRecord,
    TerwilligerRecord,
)
from ..models.spectral import Spectrum
from ..models.walk import WalkRegularityReport
from ..utils.logging import get_logger

logger = get_logger(__name__)

# Intersection arrays of the distance-regular graphs with an eigenvalue of multiplicity 3
MULTIPLICITY_THREE_ARRAYS = {
    ((3, 2, 1), (1, 2, 3)): "cube",
    ((3, 2, 1, 1, 1), (1, 1, 1, 2, 3)): "dodecahedron",
    ((5, 2, 1), (1, 2, 5)): "icosahedron",
}


def _violation(g: Graph, message: str, witness: Dict[str, Any]) -> None:
    witness = {"graph6": encode_graph6(g), **witness}
    logger.error(f"{g}: {message}; witness {witness}")
    raise TheoremViolation(message, witness)


def _is_trivial(theta: float, k: int, tol: float) -> bool:
    return abs(theta - k) <= tol or abs(theta + k) <= tol


def local_spectra(g: Graph) -> List[np.ndarray]:
    """Eigenvalues of every local graph, in decreasing order."""

    def build() -> List[np.ndarray]:
        result = []
        for x in range(g.n):
            delta, _ = local_graph(g, x)
            if delta.n == 0:
                result.append(np.zeros(0))
                continue
            values = linalg.eigvalsh(delta.adjacency_matrix().astype(float))
            result.append(values[::-1])
        return result

    return g.cached("local_spectra", build)


def _a1_b1(g: Graph) -> Tuple[int, int]:
    table = intersection_numbers(g, 1)
    return table.a[1], table.b[1]


def godsil_bound(
    g: Graph, s: Spectrum, order: Optional[int], config: Optional[AnalysisConfig] = None
) -> List[GodsilRecord]:
    """
    k <= (m + 2)(m - 1) / 2 for every eigenvalue theta != +-k of multiplicity m >= 2,
    in a 2-walk-regular graph with k >= 3 that is not complete multipartite.
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    tol = max(s.tau, config.local_eigen_tol)
    base_guards = {
        "two_walk_regular": order is not None and order >= 2,
        "not_complete_multipartite": not metrics(g).complete_multipartite,
        "valency_at_least_3": k >= 3,
    }

    records = []
    for theta, m in s.pairs():
        if _is_trivial(theta, k, tol):
            continue
        guards = {**base_guards, "multiplicity_at_least_2": m >= 2}
        bound = (m + 2) * (m - 1) / 2
        applicable = all(guards.values())
        passed = k <= bound if applicable else None
        if passed is False:
            _violation(g, f"k={k} exceeds (m+2)(m-1)/2 = {bound:g} for theta={theta:.12g}", {"theta": theta, "m": m})
        records.append(
            GodsilRecord(theta=theta, multiplicity=m, k=k, bound=bound, guards=guards, applicable=applicable, passed=passed)
        )
    return records


def terwilliger_local_bounds(
    g: Graph, s: Spectrum, order: Optional[int], config: Optional[AnalysisConfig] = None
) -> List[TerwilligerRecord]:
    """
    Per-vertex check of eta_{k-1} >= -1 - b_1/(theta_1 + 1) and eta_1 <= -1 - b_1/(theta_d + 1).

    Needs a_1 to be constant (order >= 1). The bounds are proven for
    2-walk-regular graphs; at order 1 the records are only reported, since
    1-walk-regular graphs can break the upper bound.
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    if order is None or order < 1 or s.d < 2:
        return []

    _, b1 = _a1_b1(g)
    theta_1, theta_d = s.values[1], s.values[-1]
    lower = -1 - b1 / (theta_1 + 1)
    upper = -1 - b1 / (theta_d + 1)
    slack = config.bound_slack * max(1.0, k)
    asserted = order >= 2

    records = []
    for x, eta in enumerate(local_spectra(g)):
        eta_min = float(eta[-1])
        eta_1 = float(eta[1]) if eta.size > 1 else None
        lower_holds = eta_min >= lower - slack
        upper_holds = eta_1 is None or eta_1 <= upper + slack
        if asserted and not (lower_holds and upper_holds):
            _violation(
                g,
                f"local eigenvalues at vertex {x} leave [{lower:.6g}, {upper:.6g}]",
                {"vertex": x, "eta_min": eta_min, "eta_1": eta_1, "lower": lower, "upper": upper},
            )
        records.append(
            TerwilligerRecord(
                vertex=x,
                eta_min=eta_min,
                eta_1=eta_1,
                lower_bound=lower,
                upper_bound=upper,
                lower_holds=lower_holds,
                upper_holds=upper_holds,
                asserted=asserted,
            )
        )

    if not asserted and not all(r.upper_holds and r.lower_holds for r in records):
        logger.info(f"{g}: local eigenvalue bounds fail at order {order} (not 2-walk-regular, reported only)")
    return records


def local_multiplicity_check(
    g: Graph, s: Spectrum, order: Optional[int], config: Optional[AnalysisConfig] = None
) -> List[LocalMultiplicityRecord]:
    """
    For an eigenvalue theta != k with multiplicity m < k of a 2-walk-regular
    graph: theta is theta_1 or theta_d, and b = -1 - b_1/(theta + 1) is an
    eigenvalue of every local graph with multiplicity at least k - m + [b == a_1].
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    tol = config.local_eigen_tol
    two_wr = order is not None and order >= 2
    a1 = b1 = None
    if two_wr:
        a1, b1 = _a1_b1(g)

    records = []
    for index, (theta, m) in enumerate(s.pairs()):
        if index == 0:
            continue
        guards = {"two_walk_regular": two_wr, "multiplicity_below_k": m < k}
        if not all(guards.values()):
            records.append(LocalMultiplicityRecord(theta=theta, multiplicity=m, guards=guards))
            continue

        extreme = index in (1, s.d)
        if not extreme or abs(theta + 1) <= tol:
            _violation(
                g,
                f"eigenvalue {theta:.12g} with multiplicity {m} < k is neither theta_1 nor theta_d",
                {"theta": theta, "m": m, "k": k},
            )
        b = -1 - b1 / (theta + 1)
        required = k - m + (1 if abs(b - a1) <= tol else 0)
        found = [int(np.count_nonzero(np.abs(eta - b) <= tol)) for eta in local_spectra(g)]
        min_found = min(found)
        if min_found < required:
            x = found.index(min_found)
            _violation(
                g,
                f"local graph at {x} has {b:.6g} with multiplicity {min_found} < {required}",
                {"theta": theta, "m": m, "b": b, "vertex": x},
            )
        records.append(
            LocalMultiplicityRecord(
                theta=theta,
                multiplicity=m,
                guards=guards,
                applicable=True,
                local_eigenvalue=b,
                required_multiplicity=required,
                min_found=min_found,
                extreme=extreme,
                passed=True,
            )
        )
    return records


def _locally_strongly_regular(g: Graph, a1: int, sigma: float, tau: float, tol: float) -> bool:
    """Every local graph has largest eigenvalue a_1 and all others in {sigma, tau}."""
    for eta in local_spectra(g):
        if eta.size == 0 or abs(eta[0] - a1) > tol:
            return False
        rest = eta[1:]
        if np.any((np.abs(rest - sigma) > tol) & (np.abs(rest - tau) > tol)):
            return False
    return True


def fundamental_bound(
    g: Graph, s: Spectrum, order: Optional[int], config: Optional[AnalysisConfig] = None
) -> FundamentalRecord:
    """
    (theta_1 + k/(a_1+1))(theta_d + k/(a_1+1)) >= -k a_1 b_1 / (a_1+1)^2 for 2-walk-regular graphs.

    Equality holds exactly when every local graph is strongly regular with
    eigenvalues a_1, sigma, tau (a_1 > 0) or when the graph is bipartite (a_1 = 0).
    The local inequality k (a_1 + sigma tau) <= (a_1 - sigma)(a_1 - tau) is reported alongside.
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    guards = {"two_walk_regular": order is not None and order >= 2, "not_complete": s.d >= 2}
    if not all(guards.values()):
        return FundamentalRecord(guards=guards)

    a1, b1 = _a1_b1(g)
    theta_1, theta_d = s.values[1], s.values[-1]
    shift = k / (a1 + 1)
    lhs = (theta_1 + shift) * (theta_d + shift)
    rhs = -k * a1 * b1 / (a1 + 1) ** 2
    gap = lhs - rhs
    scale = 1 + abs(rhs)
    slack = config.bound_slack * scale

    if gap < -slack:
        _violation(g, f"fundamental bound fails: {lhs:.12g} < {rhs:.12g}", {"lhs": lhs, "rhs": rhs})
    equality = abs(gap) <= slack

    sigma = -1 - b1 / (theta_d + 1)
    tau = -1 - b1 / (theta_1 + 1)
    local_lhs = k * (a1 + sigma * tau)
    local_rhs = (a1 - sigma) * (a1 - tau)
    if local_lhs > local_rhs + slack * max(1.0, k):
        _violation(g, "local inequality k(a_1 + sigma tau) <= (a_1 - sigma)(a_1 - tau) fails", {"sigma": sigma, "tau": tau})

    if a1 > 0:
        branch = "local_srg"
        branch_holds = _locally_strongly_regular(g, a1, sigma, tau, config.local_eigen_tol)
    else:
        branch = "bipartite"
        branch_holds = metrics(g).bipartite
    if branch_holds != equality:
        _violation(
            g,
            f"fundamental bound equality is {equality} but the {branch} condition is {branch_holds}",
            {"lhs": lhs, "rhs": rhs, "a1": a1},
        )

    logger.debug(f"{g}: fundamental bound lhs={lhs:.12g} rhs={rhs:.12g} equality={equality}")
    return FundamentalRecord(
        guards=guards,
        applicable=True,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        equality=equality,
        equality_branch=branch,
        branch_holds=branch_holds,
        sigma=sigma,
        tau=tau,
        local_lhs=local_lhs,
        local_rhs=local_rhs,
        passed=True,
    )


def _record(
    g: Graph, statement: str, guards: Dict[str, bool], conclusion, detail: Dict[str, Any]
) -> MultiplicityRecord:
    """Evaluate conclusion() only when every guard holds; a False conclusion is a violation."""
    applicable = all(guards.values())
    holds = bool(conclusion()) if applicable else None
    if holds is False:
        _violation(g, f"{statement} fails", {"guards": guards, **detail})
    return MultiplicityRecord(statement=statement, guards=guards, applicable=applicable, holds=holds, detail=detail)


def multiplicity_theorems(
    g: Graph,
    s: Spectrum,
    report: WalkRegularityReport,
    config: Optional[AnalysisConfig] = None,
) -> List[MultiplicityRecord]:
    """
    Instantiate the small-multiplicity statements on g:

    - an eigenvalue theta != +-k of multiplicity m <= t', for 2 <= t' <= t and t' < D, forces b_t' = 1
    - an eigenvalue theta != +-k of multiplicity m <= t, t >= 2, forces distance-regularity
    - multiplicity 2 in a 2-walk-regular graph forces distance-regularity (polygon or K_{r,r,r})
    - b_t = 1 forces distance-regularity
    - a 1-walk-regular graph has no eigenvalue theta != +-k of multiplicity 1
    - multiplicity m < k in a 2-walk-regular graph forces a_1 > 0
    - multiplicity 3: cubic with a_1 = a_2 = 0, or the cube, dodecahedron or icosahedron
    - cubic 1-walk-regular graphs of diameter >= 2 are 2-walk-regular
    """
    config = config or AnalysisConfig()
    k = require_connected_regular(g)
    tol = max(s.tau, config.local_eigen_tol)
    order = report.order
    drg = report.distance_regular
    table = report.intersection
    info = metrics(g)
    nontrivial = [(theta, m) for theta, m in s.pairs() if not _is_trivial(theta, k, tol)]
    multiplicities = sorted({m for _, m in nontrivial})
    t = order if order is not None else -1
    a1 = table.a[1] if table is not None and table.t >= 1 else None
    a2 = table.a[2] if table is not None and table.t >= 2 else None
    array = report.intersection_array
    diameter = report.diameter

    records = [
        _record(
            g,
            f"multiplicity at most {level} below the diameter forces b_{level} = 1",
            {
                "order_at_least_level": t >= level,
                "level_below_diameter": level < diameter,
                "valency_at_least_3": k >= 3,
                "multiplicity_at_most_level": any(m <= level for m in multiplicities),
            },
            lambda level=level: table.b[level] == 1,
            {"level": level, "b": list(table.b) if table is not None else None},
        )
        for level in range(2, max(t, 2) + 1)
    ]
    records += [
        _record(
            g,
            "multiplicity at most t forces distance-regularity",
            {"order_at_least_2": t >= 2, "multiplicity_at_most_order": any(m <= t for m in multiplicities)},
            lambda: drg,
            {"order": order, "multiplicities": multiplicities},
        ),
        _record(
            g,
            "multiplicity 2 forces a polygon or a regular complete tripartite graph",
            {"order_at_least_2": t >= 2, "multiplicity_2": 2 in multiplicities},
            lambda: drg and (k == 2 or info.complete_multipartite),
            {"k": k},
        ),
        _record(
            g,
            "b_t = 1 forces distance-regularity",
            {
                "order_at_least_1": t >= 1,
                "order_below_diameter": 0 <= t < report.diameter,
                "b_t_is_1": table is not None and t >= 0 and table.b[t] == 1,
            },
            lambda: drg,
            {"order": order},
        ),
        _record(
            g,
            "no eigenvalue other than +-k has multiplicity 1",
            {"order_at_least_1": t >= 1},
            lambda: 1 not in multiplicities,
            {"multiplicities": multiplicities},
        ),
        _record(
            g,
            "multiplicity below k forces a_1 > 0",
            {"order_at_least_2": t >= 2, "multiplicity_below_k": any(m < k for m in multiplicities)},
            lambda: a1 is not None and a1 > 0,
            {"a1": a1, "k": k},
        ),
        _record(
            g,
            "multiplicity 3 gives a cubic graph with a_1 = a_2 = 0 or a distance-regular graph",
            {
                "order_at_least_2": t >= 2,
                "not_complete_multipartite": not info.complete_multipartite,
                "valency_at_least_3": k >= 3,
                "multiplicity_3": 3 in multiplicities,
            },
            lambda: (k == 3 and a1 == 0 and a2 == 0) or drg,
            {"k": k, "a1": a1, "a2": a2, "distance_regular": drg},
        ),
        _record(
            g,
            "a distance-regular graph with multiplicity 3 is the cube, dodecahedron or icosahedron",
            {
                "distance_regular": drg,
                "not_complete_multipartite": not info.complete_multipartite,
                "valency_at_least_3": k >= 3,
                "multiplicity_3": 3 in multiplicities,
            },
            lambda: array is not None and (array.b, array.c) in MULTIPLICITY_THREE_ARRAYS,
            {"intersection_array": str(array) if array else None},
        ),
        _record(
            g,
            "cubic 1-walk-regular graphs are 2-walk-regular",
            {"cubic": k == 3, "order_at_least_1": t >= 1, "diameter_at_least_2": distances(g).diameter >= 2},
            lambda: t >= 2,
            {"order": order},
        ),
    ]
    for record in records:
        if record.applicable:
            logger.debug(f"{g}: '{record.statement}' holds")
    return records
