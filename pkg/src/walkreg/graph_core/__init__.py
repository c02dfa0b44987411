from .catalog import CATALOG, catalog, catalog_names
from .graph_io import (
    encode_graph6,
    encode_json_edges,
    parse_graph,
    parse_graph6,
    parse_json_edges,
    read_graph,
    read_graphs,
    to_networkx,
    write_graph,
)
from .structure import (
    complement,
    distance_matrix,
    distances,
    induced_subgraph,
    is_connected,
    local_graph,
    metrics,
    neighbour_counts,
)

__all__ = [
    "CATALOG",
    "catalog",
    "catalog_names",
    "complement",
    "distance_matrix",
    "distances",
    "encode_graph6",
    "encode_json_edges",
    "induced_subgraph",
    "is_connected",
    "local_graph",
    "metrics",
    "neighbour_counts",
    "parse_graph",
    "parse_graph6",
    "parse_json_edges",
    "read_graph",
    "read_graphs",
    "to_networkx",
    "write_graph",
]
