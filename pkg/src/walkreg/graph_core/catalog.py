"""
Named graph families.

Vertex labelings are fixed per family so that fixtures and vertex maps stay
stable between releases:

- cycle(n): i ~ i+1 mod n.
- complete(n): all pairs.
- complete_multipartite(parts, size): vertex part*size + idx; pairs in
  different parts are adjacent. octahedron = complete_multipartite(3, 2),
  cocktail_party(n) = complete_multipartite(n, 2).
- hamming(d, q): the word (w_0, ..., w_{d-1}) over 0..q-1 is vertex
  sum(w_i * q**(d-1-i)); words at Hamming distance one are adjacent.
  hypercube(d) = hamming(d, 2), cube = hypercube(3), rook(n) = L2(n) =
  hamming(2, n) so cell (i, j) is vertex i*n + j.
- generalized_petersen(n, k): outer vertex i, inner vertex n+i; edges
  i ~ i+1, i ~ n+i, n+i ~ n+(i+k mod n). petersen = GP(5, 2),
  dodecahedron = GP(10, 2).
- icosahedron: 0 is the top, 1..5 the upper pentagon, 6..10 the lower
  pentagon, 11 the bottom; upper i is adjacent to lower 5+i and 5+(i mod 5)+1.
- paley(q) = conference(q): residues mod q, x ~ y when x - y is a non-zero
  square; q must be a prime congruent to 1 mod 4.
- generalized_hamming(m, n, p): the Cartesian product K_m x K_n x K_p with
  vertex (a*n + b)*p + c.
"""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, List, Sequence, Tuple

from ..errors import GraphInputError
from ..models.graph import Graph
from ..utils.logging import get_logger

logger = get_logger(__name__)


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2), name=f"K{n}")


def complete_multipartite(parts: int, size: int) -> Graph:
    _require(parts >= 1 and size >= 1, f"complete_multipartite needs parts, size >= 1, got {parts}x{size}")
    n = parts * size
    edges = [(u, v) for u, v in combinations(range(n), 2) if u // size != v // size]
    return Graph.from_edges(n, edges, name=f"K_{{{parts}x{size}}}")


def cocktail_party(n: int) -> Graph:
    _require(n >= 2, f"cocktail_party needs n >= 2, got {n}")
    return complete_multipartite(n, 2).renamed(f"CP({n})")


def octahedron() -> Graph:
    return complete_multipartite(3, 2).renamed("octahedron")


def hamming(d: int, q: int) -> Graph:
    _require(d >= 1 and q >= 2, f"hamming needs d >= 1 and q >= 2, got d={d}, q={q}")
    words = list(product(range(q), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for symbol in range(w[pos] + 1, q):
                neighbour = w[:pos] + (symbol,) + w[pos + 1:]
                edges.append((index[w], index[neighbour]))
    return Graph.from_edges(len(words), edges, name=f"H({d},{q})")


def hypercube(d: int) -> Graph:
    return hamming(d, 2).renamed(f"Q{d}")


def cube() -> Graph:
    return hypercube(3).renamed("cube")


def rook(n: int) -> Graph:
    _require(n >= 2, f"rook needs n >= 2, got {n}")
    return hamming(2, n).renamed(f"L2({n})")


def generalized_petersen(n: int, k: int) -> Graph:
    _require(n >= 3, f"generalized_petersen needs n >= 3, got {n}")
    _require(1 <= k and 2 * k < n, f"generalized_petersen needs 1 <= k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges, name=f"GP({n},{k})")


def petersen() -> Graph:
    return generalized_petersen(5, 2).renamed("petersen")


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2).renamed("dodecahedron")


def icosahedron() -> Graph:
    top, bottom = 0, 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    edges = []
    for pos in range(5):
        u, w = upper[pos], lower[pos]
        edges += [(top, u), (bottom, w)]
        edges += [(u, upper[(pos + 1) % 5]), (w, lower[(pos + 1) % 5])]
        edges += [(u, w), (u, lower[(pos + 1) % 5])]
    return Graph.from_edges(12, edges, name="icosahedron")


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q ** 0.5) + 1))


def paley(q: int) -> Graph:
    _require(_is_prime(q) and q % 4 == 1, f"paley needs a prime q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u, v in combinations(range(q), 2) if (v - u) % q in squares]
    return Graph.from_edges(q, edges, name=f"Paley({q})")


def generalized_hamming(m: int, n: int, p: int) -> Graph:
    _require(min(m, n, p) >= 1, f"generalized_hamming needs m, n, p >= 1, got {m}, {n}, {p}")
    vertices = list(product(range(m), range(n), range(p)))
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[x], index[y])
        for x, y in combinations(vertices, 2)
        if sum(a != b for a, b in zip(x, y)) == 1
    ]
    return Graph.from_edges(len(vertices), edges, name=f"K{m}xK{n}xK{p}")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphInputError(message)


@dataclass(frozen=True)
class CatalogEntry:
    """A named family: its builder and the parameters it expects."""

    name: str
    params: Tuple[str, ...]
    builder: Callable[..., Graph]
    description: str


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in [
        CatalogEntry("cycle", ("n",), cycle, "Cycle C_n"),
        CatalogEntry("complete", ("n",), complete, "Complete graph K_n"),
        CatalogEntry("complete_multipartite", ("parts", "size"), complete_multipartite, "Complete multipartite K_{parts x size}"),
        CatalogEntry("cocktail_party", ("n",), cocktail_party, "Cocktail party graph K_{n x 2}"),
        CatalogEntry("octahedron", (), octahedron, "Octahedron K_{3x2}"),
        CatalogEntry("hypercube", ("d",), hypercube, "Hypercube Q_d"),
        CatalogEntry("cube", (), cube, "Cube Q_3"),
        CatalogEntry("hamming", ("d", "q"), hamming, "Hamming graph H(d,q)"),
        CatalogEntry("rook", ("n",), rook, "Rook's graph / lattice graph L2(n)"),
        CatalogEntry("generalized_petersen", ("n", "k"), generalized_petersen, "Generalized Petersen graph GP(n,k)"),
        CatalogEntry("petersen", (), petersen, "Petersen graph GP(5,2)"),
        CatalogEntry("dodecahedron", (), dodecahedron, "Dodecahedron GP(10,2)"),
        CatalogEntry("icosahedron", (), icosahedron, "Icosahedron"),
        CatalogEntry("paley", ("q",), paley, "Paley (conference) graph on a prime q = 1 mod 4"),
        CatalogEntry("generalized_hamming", ("m", "n", "p"), generalized_hamming, "Cartesian product K_m x K_n x K_p"),
    ]
}

ALIASES: Dict[str, str] = {
    "L2": "rook",
    "lattice": "rook",
    "conference": "paley",
    "gp": "generalized_petersen",
}


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def resolve_name(name: str) -> CatalogEntry:
    key = ALIASES.get(name, ALIASES.get(name.lower(), name.lower()))
    entry = CATALOG.get(key)
    if entry is None:
        raise GraphInputError(f"Unknown catalog graph '{name}'. Known: {', '.join(catalog_names())}")
    return entry


def catalog(name: str, params: Sequence[int] = ()) -> Graph:
    """
    Build a named graph.

    Args:
        name: Family name or alias (see CATALOG and ALIASES)
        params: Integer parameters in the order listed by the entry

    Raises:
        GraphInputError: Unknown name, wrong parameter count or parameters out of range
    """
    entry = resolve_name(name)
    params = [int(p) for p in params]
    if len(params) != len(entry.params):
        expected = ", ".join(entry.params) or "no parameters"
        raise GraphInputError(f"{entry.name} expects {expected}; got {len(params)} value(s)")
    graph = entry.builder(*params)
    logger.debug(f"Built catalog graph {graph}")
    return graph
