from .cliques import (
    clique_profile,
    clique_rank_check,
    delsarte_bound,
    is_clique,
    is_delsarte_clique,
    maximal_cliques,
    phi_prediction,
    smallest_idempotent,
)
from .exact_cover import ExactCoverSolver
from .geometric import (
    check_lines_per_vertex,
    delsarte_cliques,
    dual_graph,
    finiteness_bounds,
    geometric_decomposition,
    geometric_sufficiency,
    local_coclique_bound,
)

__all__ = [
    "ExactCoverSolver",
    "check_lines_per_vertex",
    "clique_profile",
    "clique_rank_check",
    "delsarte_bound",
    "delsarte_cliques",
    "dual_graph",
    "finiteness_bounds",
    "geometric_decomposition",
    "geometric_sufficiency",
    "is_clique",
    "is_delsarte_clique",
    "local_coclique_bound",
    "maximal_cliques",
    "phi_prediction",
    "smallest_idempotent",
]
