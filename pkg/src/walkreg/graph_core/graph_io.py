"""
Graph interchange: graph6 (McKay's format) and a JSON edge list.

Decoding and encoding of the graph6 bit field is delegated to networkx; this
module validates records up front so that malformed input is reported with a
precise reason instead of a generic parser error.
"""
import json
import math
import sys
from pathlib import Path
from typing import List, Optional, Union

import networkx as nx

from ..errors import Graph6Error, GraphInputError
from ..models.graph import Graph
from ..utils.logging import get_logger

logger = get_logger(__name__)

GRAPH6_HEADER = ">>graph6<<"
# graph6 stores n in 6, 18 or 36 bits
GRAPH6_MAX_N = 68719476735


def _strip_graph6(text: str) -> str:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def _decode_size(record: str) -> tuple:
    """Return (n, header_length) for a graph6 record."""
    if not record:
        raise Graph6Error("Empty graph6 record")
    if record[0] != "~":
        return ord(record[0]) - 63, 1
    if len(record) >= 2 and record[1] == "~":
        if len(record) < 8:
            raise Graph6Error("Truncated 36-bit graph6 size header")
        chunks, header = record[2:8], 8
    else:
        if len(record) < 4:
            raise Graph6Error("Truncated 18-bit graph6 size header")
        chunks, header = record[1:4], 4

    n = 0
    for ch in chunks:
        n = (n << 6) | (ord(ch) - 63)
    return n, header


def parse_graph6(text: str, name: str = "") -> Graph:
    """
    Parse one graph6 record (standard or extended size header).

    Args:
        text: The record, optionally prefixed with '>>graph6<<'
        name: Optional label for the returned graph

    Returns:
        The graph with exactly the encoded edge set

    Raises:
        Graph6Error: Malformed header, truncated bit field, or characters outside the graph6 alphabet
    """
    record = _strip_graph6(text)
    if not record:
        raise Graph6Error("Empty graph6 record")

    for pos, ch in enumerate(record):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"Character {ch!r} at position {pos} is outside the graph6 alphabet")

    n, header = _decode_size(record)
    if header == 4 and n > 258047:
        raise Graph6Error(f"18-bit size header cannot hold n={n}")

    expected = math.ceil(n * (n - 1) // 2 / 6)
    body = len(record) - header
    if body < expected:
        raise Graph6Error(f"Truncated graph6 bit field: expected {expected} characters after the header, got {body}")
    if body > expected:
        raise Graph6Error(f"Trailing data in graph6 record: expected {expected} characters after the header, got {body}")

    try:
        nx_graph = nx.from_graph6_bytes(record.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6Error(f"Invalid graph6 record: {e}") from e

    graph = Graph.from_edges(n, nx_graph.edges(), name=name)
    logger.debug(f"Parsed graph6 record into {graph}")
    return graph


def encode_graph6(g: Graph) -> str:
    """
    Encode a graph as a canonical graph6 string (no header, no newline).

    Raises:
        Graph6Error: If the vertex count exceeds the format limit
    """
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 cannot encode n={g.n} (limit {GRAPH6_MAX_N})")
    nx_graph = to_networkx(g)
    data = nx.to_graph6_bytes(nx_graph, nodes=list(range(g.n)), header=False)
    return data.decode("ascii").strip()


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.sorted_edges())
    return nx_graph


def parse_json_edges(text: str, name: str = "") -> Graph:
    """
    Parse a JSON edge list of the form {"n": int, "edges": [[u, v], ...]}.

    Raises:
        GraphInputError: On invalid JSON, a missing field, a repeated edge or a self-loop
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphInputError(f"Invalid JSON edge list: {e}") from e

    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphInputError("JSON edge list must be an object with 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphInputError(f"'n' must be an integer, got {n!r}")

    pairs = []
    seen = set()
    for item in data["edges"]:
        if not isinstance(item, (list, tuple)) or len(item) != 2 or not all(isinstance(v, int) for v in item):
            raise GraphInputError(f"Edge {item!r} is not a pair of integers")
        key = tuple(sorted(item))
        if key in seen:
            raise GraphInputError(f"Parallel edge {list(key)} in JSON edge list")
        seen.add(key)
        pairs.append(key)

    return Graph.from_edges(n, pairs, name=name or data.get("name", ""))


def encode_json_edges(g: Graph) -> str:
    payload = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.name:
        payload["name"] = g.name
    return json.dumps(payload, sort_keys=True)


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "graph6"


def parse_graph(text: str, fmt: Optional[str] = None, name: str = "") -> Graph:
    """Parse graph text in the given format ('graph6' or 'json'), auto-detecting when omitted."""
    fmt = fmt or detect_format(text)
    if fmt == "json":
        return parse_json_edges(text, name=name)
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise Graph6Error("Empty graph6 input")
        if len(lines) > 1:
            logger.warning(f"Input holds {len(lines)} graph6 records; using the first")
        return parse_graph6(lines[0], name=name)
    raise GraphInputError(f"Unknown graph format '{fmt}' (expected 'graph6' or 'json')")


def read_graph(source: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    """Read a graph from a file path, or from standard input when source is '-'."""
    if str(source) == "-":
        text = sys.stdin.read()
        name = "stdin"
    else:
        path = Path(source)
        if not path.exists():
            raise GraphInputError(f"Input file not found: {path}")
        text = path.read_text(encoding="utf-8")
        name = path.stem
        if fmt is None and path.suffix.lower() == ".json":
            fmt = "json"
    logger.debug(f"Reading graph from {source} (format={fmt or 'auto'})")
    return parse_graph(text, fmt=fmt, name=name)


def read_graphs(source: Union[str, Path]) -> List[Graph]:
    """Read every graph6 record of a multi-line file."""
    path = Path(source)
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]
    return [parse_graph6(line, name=f"{path.stem}:{i}") for i, line in enumerate(lines)]


def write_graph(g: Graph, destination: Union[str, Path], fmt: str = "graph6") -> None:
    text = encode_json_edges(g) if fmt == "json" else encode_graph6(g)
    Path(destination).write_text(text + "\n", encoding="utf-8")
    logger.info(f"Wrote {g} to {destination} as {fmt}")
