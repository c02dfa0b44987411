"""Shared graph corpus for the test-suite."""
import os
import sys
from functools import lru_cache
from itertools import combinations
from typing import Dict, List

import networkx as nx

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.walkreg.constructions import (
    bipartite_double,
    coclique_extension,
    complement_block_double,
    distance_k_graph,
    kronecker_product,
    line_graph,
)
from src.walkreg.graph_core import catalog, encode_graph6, parse_graph6, read_graph
from src.walkreg.models import Graph

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

BIGGS_SMITH_LCF = [
    16, 24, -38, 17, 34, 48, -19, 41, -35, 47, -20, 34, -36, 21, 14, 48, -16, -36, -43, 28, -17, 21, 29, -43, 46, -24,
    28, -38, -14, -50, -45, 21, 8, 27, -21, 20, -37, 39, -34, -44, -8, 38, -21, 25, 15, -34, 18, -28, -41, 36, 8, -29,
    -21, -48, -28, -20, -47, 14, -8, -15, -27, 38, 24, -48, -18, 25, 38, 31, -25, 24, -46, -14, 28, 11, 21, 35, -39,
    43, 36, -38, 14, 50, 43, 36, -11, -36, -24, 45, 8, 19, -25, 38, 20, -24, -14, -21, -8, 44, -31, -38, -28, 37,
]

# The 11-point biplane: translates of the difference set {1, 3, 4, 5, 9} mod 11
BIPLANE_BASE_BLOCK = (1, 3, 4, 5, 9)


def _through_graph6(edges, n: int, name: str) -> Graph:
    """Route a generated fixture through the graph6 codec so ingestion is exercised."""
    return parse_graph6(encode_graph6(Graph.from_edges(n, edges)), name=name)


@lru_cache(maxsize=None)
def biplane_flag_graph() -> Graph:
    """Flags (p, B) of the biplane; (p, B) ~ (q, C) when B and C meet exactly in {p, q}."""
    blocks = [frozenset((j + b) % 11 for b in BIPLANE_BASE_BLOCK) for j in range(11)]
    flags = [(p, j) for j, block in enumerate(blocks) for p in sorted(block)]
    edges = [
        (x, y)
        for (x, (p, b)), (y, (q, c)) in combinations(enumerate(flags), 2)
        if p != q and b != c and blocks[b] & blocks[c] == {p, q}
    ]
    return _through_graph6(edges, len(flags), "biplane-flags")


@lru_cache(maxsize=None)
def biggs_smith() -> Graph:
    nx_graph = nx.LCF_graph(102, BIGGS_SMITH_LCF, 1)
    return _through_graph6(nx_graph.edges(), 102, "biggs-smith")


def two_diamonds() -> Graph:
    return read_graph(os.path.join(DATA_DIR, "two_diamonds.g6"))


def disconnected_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], name="2K3")


def conference_double(q: int) -> Graph:
    """Bipartite double of the complement-block double of a Paley graph."""
    return bipartite_double(complement_block_double(catalog("paley", [q])).graph).graph


@lru_cache(maxsize=None)
def corpus() -> Dict[str, Graph]:
    """Named connected regular graphs used by the sweeps (walk-regular or not)."""
    graphs = {
        "C5": catalog("cycle", [5]),
        "C6": catalog("cycle", [6]),
        "K4": catalog("complete", [4]),
        "octahedron": catalog("octahedron"),
        "cube": catalog("cube"),
        "Q4": catalog("hypercube", [4]),
        "H(2,3)": catalog("hamming", [2, 3]),
        "L2(4)": catalog("rook", [4]),
        "petersen": catalog("petersen"),
        "dodecahedron": catalog("dodecahedron"),
        "icosahedron": catalog("icosahedron"),
        "GP(8,3)": catalog("generalized_petersen", [8, 3]),
        "GP(7,2)": catalog("generalized_petersen", [7, 2]),
        "paley(13)": catalog("paley", [13]),
        "K_2x2x6": catalog("generalized_hamming", [2, 2, 6]),
        "two-diamonds": two_diamonds(),
        "biplane-flags": biplane_flag_graph(),
    }
    dodecahedron = graphs["dodecahedron"]
    petersen = graphs["petersen"]
    graphs.update(
        {
            "double(dodecahedron)": bipartite_double(dodecahedron).graph,
            "dist2(dodecahedron)": distance_k_graph(dodecahedron, 2).graph,
            "line(petersen)": line_graph(petersen).graph,
            "petersen x C5": kronecker_product(petersen, catalog("cycle", [5])).graph,
            "C3 x C3": kronecker_product(catalog("cycle", [3]), catalog("cycle", [3])).graph,
            "K3[3]": coclique_extension(catalog("complete", [3]), 3).graph,
            "L2(4)[2]": coclique_extension(graphs["L2(4)"], 2).graph,
            "conference(5)": conference_double(5),
        }
    )
    return graphs


def cubic_graphs() -> List[Graph]:
    return [g for g in corpus().values() if g.valency() == 3]
