"""
Full analysis of one graph and its JSON rendering.

The spectral pipeline and the clique enumeration run side by side in a
thread pool; everything else, and the report assembly, is sequential so
the output only depends on the input graph and the configuration.
"""
import json
import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..clique_geometry.cliques import clique_profile, clique_rank_check, delsarte_bound, maximal_cliques
from ..clique_geometry.geometric import (
    check_lines_per_vertex,
    delsarte_cliques,
    finiteness_bounds,
    geometric_decomposition,
    geometric_sufficiency,
)
from ..config_manager import AnalysisConfig
from ..errors import BudgetExceeded, GraphInputError, TheoremViolation
from ..exact_walk.intersection import walk_regularity_report
from ..graph_core.graph_io import encode_graph6
from ..graph_core.structure import metrics
from ..models.construction import ConstructionResult
from ..models.geometry import CliqueSet, GeometricStatus
from ..models.graph import Graph
from ..models.report import AnalysisReport, BoundsReport, CosineRecord, GraphSummary
from ..models.spectral import Idempotent, Spectrum
from ..models.walk import WalkRegularityReport
from ..spectral.cosines import cosine_sequence, spectral_wr_order, u2_extremes
from ..spectral.eigen import minimal_idempotents, spectrum
from ..spectral.representation import check_coincident_images, representation_quotient
from ..utils.logging import get_logger
from .bounds import (
    fundamental_bound,
    godsil_bound,
    local_multiplicity_check,
    multiplicity_theorems,
    terwilliger_local_bounds,
)

logger = get_logger(__name__)

SECTIONS = ["walk", "spectrum", "cosines", "covers", "bounds", "cliques", "geometry"]


def _spectral_stage(
    g: Graph, order: Optional[int], diameter: int, config: AnalysisConfig
) -> Tuple[Spectrum, List[Idempotent], Optional[int], List[CosineRecord], List[Dict[str, Any]]]:
    s = spectrum(g, config=config)
    idempotents = minimal_idempotents(g, s, config)
    spectral_order = spectral_wr_order(g, config)
    k = g.valency()

    cosines = []
    for e in idempotents:
        e_order = e.order()
        values: List[float] = []
        if e_order is not None:
            values = list(cosine_sequence(g, e, min(e_order, diameter), config))
        cosines.append(CosineRecord(theta=e.theta, multiplicity=e.rank, order=e_order, cosines=values))

    u2_extremes(g, idempotents, order)
    check_coincident_images(g, idempotents, order, config)

    covers = []
    if order is not None and order >= 1:
        for e in idempotents:
            if e.rank == 2 and min(abs(e.theta - k), abs(e.theta + k)) > s.tau:
                result = representation_quotient(g, e, config)
                covers.append({"theta": e.theta, "classes": len(result.partition), **result.cover.to_dict()})
    return s, idempotents, spectral_order, cosines, covers


def _clique_stage(g: Graph, config: AnalysisConfig) -> Optional[CliqueSet]:
    try:
        return maximal_cliques(g, config.clique_cap)
    except BudgetExceeded as e:
        logger.warning(f"{g}: {e}")
        return None


def _clique_section(
    g: Graph, cliques: Optional[CliqueSet], s: Spectrum, idempotents: List[Idempotent], walk: WalkRegularityReport,
    config: AnalysisConfig,
) -> Tuple[Dict[str, Any], List[Dict[str, Any]]]:
    k = g.valency()
    bound = delsarte_bound(k, s.values[-1], config.delsarte_integer_tol)
    section: Dict[str, Any] = {
        "delsarte_bound": bound.bound,
        "delsarte_integer": bound.integer_candidate,
        "enumerated": cliques is not None,
    }
    if cliques is None:
        return section, []

    section["clique_number"] = cliques.clique_number
    section["size_histogram"] = {str(size): count for size, count in sorted(cliques.size_histogram().items())}
    rank_records: List[Dict[str, Any]] = []
    order = walk.order
    if order is not None and order >= 1:
        if cliques.clique_number > bound.bound + config.bound_slack * max(1.0, k):
            witness = {"graph6": encode_graph6(g), "clique_number": cliques.clique_number, "bound": bound.bound}
            logger.error(f"{g}: clique number above the Delsarte bound; witness {witness}")
            raise TheoremViolation("a clique exceeds 1 - k/theta_d in a 1-walk-regular graph", witness)
        rank_records = clique_rank_check(g, idempotents, cliques)
        lines = delsarte_cliques(g, config)
        section["delsarte_cliques"] = len(lines)
        if lines:
            t = min(order, walk.diameter)
            profile = clique_profile(g, lines[0], t, idempotents[-1])
            section["profile"] = {"clique": list(lines[0]), **profile.to_dict()}
    return section, rank_records


def _geometry_section(g: Graph, s: Spectrum, walk: WalkRegularityReport, config: AnalysisConfig) -> Dict[str, Any]:
    if walk.order is None or walk.order < 1:
        return {"status": "skipped", "reason": f"walk-regularity order {walk.order}"}
    try:
        result = geometric_decomposition(g, config)
    except BudgetExceeded as e:
        logger.warning(f"{g}: geometric search stopped: {e}")
        return {"status": GeometricStatus.UNKNOWN.value, "reason": str(e)}

    section = result.to_dict()
    if result.cover is not None:
        counts = check_lines_per_vertex(g, result.cover, s.values[-1], walk.intersection.a[1])
        section["lines_per_vertex"] = counts
    if walk.order >= 2:
        omega = max(2, math.ceil(-s.values[-1] - config.bound_slack))
        try:
            section["sufficiency"] = geometric_sufficiency(g, omega, config).to_dict()
        except BudgetExceeded as e:
            section["sufficiency"] = {"verdict": GeometricStatus.UNKNOWN.value, "reason": str(e)}
    return section


def analyze(
    g: Graph, config: Optional[AnalysisConfig] = None, construction: Optional[ConstructionResult] = None
) -> AnalysisReport:
    """
    Run every analysis on g and assemble the report.

    Disconnected or irregular graphs get metrics only, with the other sections
    listed as skipped. A clique or search budget running out turns the
    affected section into "unknown" instead of failing the analysis.

    Raises:
        GraphInputError: g has more than config.max_n vertices
        TheoremViolation: A proven statement failed on g
        NumericalError: The floating-point side could not be trusted
    """
    config = config or AnalysisConfig()
    if g.n > config.max_n:
        raise GraphInputError(f"{g} has {g.n} vertices, more than max_n={config.max_n}")

    info = metrics(g)
    base = {
        "graph": GraphSummary(name=g.name, n=g.n, edges=g.size, graph6=encode_graph6(g)),
        "metrics": info.to_dict(),
        "construction": construction.to_dict() if construction is not None else None,
    }
    if not info.connected or not info.regular or g.n < 2:
        reason = "disconnected" if not info.connected else ("irregular" if not info.regular else "trivial")
        logger.info(f"{g}: {reason}, reporting metrics only")
        return AnalysisReport(**base, skipped=list(SECTIONS), skip_reason=reason)

    walk = walk_regularity_report(g)
    logger.info(f"{g}: walk-regularity order {walk.order}, d={walk.d}, D={walk.diameter}")

    with ThreadPoolExecutor(max_workers=min(2, config.worker_count())) as pool:
        spectral_future = pool.submit(_spectral_stage, g, walk.order, walk.diameter, config)
        clique_future = pool.submit(_clique_stage, g, config)
        s, idempotents, spectral_order, cosines, covers = spectral_future.result()
        cliques = clique_future.result()

    bounds = BoundsReport(
        godsil=godsil_bound(g, s, walk.order, config),
        terwilliger=terwilliger_local_bounds(g, s, walk.order, config),
        local_multiplicity=local_multiplicity_check(g, s, walk.order, config),
        fundamental=fundamental_bound(g, s, walk.order, config),
        multiplicity=multiplicity_theorems(g, s, walk, config),
    )
    if walk.order is not None and walk.order >= 2:
        bounds.finiteness = finiteness_bounds(g, config).to_dict()

    clique_section, rank_records = _clique_section(g, cliques, s, idempotents, walk, config)
    bounds.clique_rank = rank_records
    geometry = _geometry_section(g, s, walk, config)

    return AnalysisReport(
        **base,
        walk=walk.to_dict(),
        spectrum=s.to_dict(),
        spectral_order=spectral_order,
        cosines=cosines,
        covers=covers,
        bounds=bounds,
        cliques=clique_section,
        geometry=geometry,
    )


def _plain(value: Any, digits: int) -> Any:
    """JSON-ready copy with reals rounded to the given significant digits."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        rounded = float(f"{value:.{digits}g}")
        return 0.0 if rounded == 0 else rounded
    if isinstance(value, dict):
        return {str(key): _plain(item, digits) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item, digits) for item in value]
    return value


def report_dict(report: AnalysisReport, digits: int = 12) -> Dict[str, Any]:
    return _plain(report.model_dump(by_alias=True), digits)


def report_json(report: AnalysisReport, digits: int = 12) -> str:
    """Deterministic JSON: fixed key order, reals at `digits` significant digits."""
    return json.dumps(report_dict(report, digits), indent=2, allow_nan=False) + "\n"
