from .common import merge_spectrum, spectra_match, strongly_regular_parameters, verify_guarantee
from .derived import distance_k_graph, line_graph
from .doubles import bipartite_double, complement_block_double, halved_graphs
from .products import cartesian_square, coclique_extension, kronecker_product
from .registry import CONSTRUCTIONS, run_construction

__all__ = [
    "CONSTRUCTIONS",
    "bipartite_double",
    "cartesian_square",
    "coclique_extension",
    "complement_block_double",
    "distance_k_graph",
    "halved_graphs",
    "kronecker_product",
    "line_graph",
    "merge_spectrum",
    "run_construction",
    "spectra_match",
    "strongly_regular_parameters",
    "verify_guarantee",
]
