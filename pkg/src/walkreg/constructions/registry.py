"""Name-based dispatch used by the CLI `construct` command."""
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from ..errors import GraphInputError
from ..models.construction import ConstructionResult
from ..models.graph import Graph
from .derived import distance_k_graph, line_graph
from .doubles import bipartite_double, complement_block_double, halved_graphs
from .products import cartesian_square, coclique_extension, kronecker_product


@dataclass(frozen=True)
class ConstructionSpec:
    name: str
    inputs: int
    params: Tuple[str, ...]
    run: Callable[..., List[ConstructionResult]]
    description: str


CONSTRUCTIONS: Dict[str, ConstructionSpec] = {
    spec.name: spec
    for spec in [
        ConstructionSpec("bipartite_double", 1, (), lambda g: [bipartite_double(g)], "Bipartite double x+/x-"),
        ConstructionSpec("distance_k", 1, ("i",), lambda g, i: [distance_k_graph(g, i)], "Distance-i graph"),
        ConstructionSpec("halved", 1, (), lambda g: list(halved_graphs(g)), "Both halved graphs of a bipartite graph"),
        ConstructionSpec("line_graph", 1, (), lambda g: [line_graph(g)], "Line graph"),
        ConstructionSpec("kronecker", 2, (), lambda g, h: [kronecker_product(g, h)], "Kronecker (tensor) product"),
        ConstructionSpec("cartesian_square", 1, (), lambda g: [cartesian_square(g)], "Cartesian square G (+) G"),
        ConstructionSpec("coclique_extension", 1, ("s",), lambda g, s: [coclique_extension(g, s)], "s-coclique extension A (x) J"),
        ConstructionSpec(
            "complement_block_double", 1, (), lambda g: [complement_block_double(g)], "[[A, Abar], [Abar, A]] double"
        ),
    ]
}


def run_construction(name: str, graphs: Sequence[Graph], params: Dict[str, int]) -> List[ConstructionResult]:
    """
    Raises:
        GraphInputError: Unknown construction, wrong number of inputs or missing/extra parameters
    """
    spec = CONSTRUCTIONS.get(name)
    if spec is None:
        raise GraphInputError(f"Unknown construction '{name}'. Known: {', '.join(sorted(CONSTRUCTIONS))}")
    if len(graphs) != spec.inputs:
        raise GraphInputError(f"{name} takes {spec.inputs} input graph(s), got {len(graphs)}")
    if set(params) != set(spec.params):
        expected = ", ".join(spec.params) or "none"
        raise GraphInputError(f"{name} parameters: expected {expected}, got {', '.join(params) or 'none'}")
    return spec.run(*graphs, *(params[p] for p in spec.params))
