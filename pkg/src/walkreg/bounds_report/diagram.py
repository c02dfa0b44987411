"""Distance distribution diagrams in Graphviz DOT."""
from typing import List, Optional, Tuple

import numpy as np

from ..errors import PreconditionError
from ..graph_core.structure import distances, neighbour_counts
from ..models.graph import Graph
from ..models.report import AnalysisReport
from ..utils.logging import get_logger

logger = get_logger(__name__)


def _span(values: np.ndarray) -> Tuple[int, int]:
    if values.size == 0:
        return 0, 0
    return int(values.min()), int(values.max())


def _label(low: int, high: int) -> str:
    return str(low) if low == high else f"{low}..{high}"


def distance_profile(g: Graph) -> List[dict]:
    """
    Per distance i: ranges of k_i, a_i, b_i and c_i over all pairs at distance i.

    Up to the walk-regularity order every range is a single value.
    """
    data = distances(g)
    if not data.connected:
        raise PreconditionError(f"{g} is disconnected; the diagram needs one distance partition")

    dist = data.dist
    rows = []
    for i in range(data.diameter + 1):
        mask = dist == i
        row = {"distance": i, "k": _span(data.class_counts[:, i])}
        # (A_j A)[x, y] = neighbours of y at distance j from x
        for label, j in (("c", i - 1), ("a", i), ("b", i + 1)):
            if 0 <= j <= data.diameter:
                row[label] = _span(neighbour_counts(g, j)[mask])
            else:
                row[label] = (0, 0)
        rows.append(row)
    return rows


def emit_diagram(g: Graph, report: Optional[AnalysisReport] = None) -> str:
    """
    DOT digraph of the distance classes of g.

    Node i is labelled with k_i and a_i; the arc i -> i+1 carries b_i and the
    arc i+1 -> i carries c_{i+1}. Values that vary across vertices are shown
    as min..max ranges.
    """
    rows = distance_profile(g)
    name = (report.graph.name if report is not None else g.name) or "graph"
    order = None
    if report is not None and report.walk is not None:
        order = report.walk.get("order")

    lines = [f'digraph "{name}" {{', "  rankdir=LR;", "  node [shape=circle];"]
    if order is not None:
        lines.append(f'  label="walk-regularity order {order}";')
    for row in rows:
        i = row["distance"]
        style = "" if _is_exact(row) else ", style=dashed"
        lines.append(f'  d{i} [label="{_label(*row["k"])}\\na={_label(*row["a"])}"{style}];')
    for row, following in zip(rows, rows[1:]):
        i = row["distance"]
        lines.append(f'  d{i} -> d{i + 1} [label="{_label(*row["b"])}"];')
        lines.append(f'  d{i + 1} -> d{i} [label="{_label(*following["c"])}"];')
    lines.append("}")
    logger.debug(f"{g}: diagram with {len(rows)} distance classes")
    return "\n".join(lines) + "\n"


def _is_exact(row: dict) -> bool:
    return all(row[key][0] == row[key][1] for key in ("k", "a", "b", "c"))
