"""The `geometry` command: Delsarte cliques and geometric decompositions."""
from typing import Optional

import typer
from rich import box
from rich.table import Table

from ....clique_geometry import delsarte_bound, dual_graph, geometric_decomposition, maximal_cliques
from ....exact_walk.walk_counts import require_connected_regular
from ....graph_core.graph_io import encode_graph6, read_graph
from ....models.geometry import GeometricStatus
from ....spectral.eigen import spectrum
from ....utils.logging import get_logger
from .common import console, exit_on_error, get_config

logger = get_logger(__name__)


def geometry_command(
    ctx: typer.Context,
    source: str = typer.Argument(..., help="Graph file (graph6 or JSON edge list), '-' for stdin"),
    node_budget: Optional[int] = typer.Option(None, "--node-budget", help="Exact-cover branch node budget"),
    show_lines: bool = typer.Option(False, "--lines", help="Print every line of the cover"),
):
    """Decide whether a 1-walk-regular graph is geometric. Exits 3 when the search budget runs out."""
    config = get_config(ctx)
    if node_budget is not None:
        config = config.model_copy(update={"node_budget": node_budget})

    with exit_on_error():
        g = read_graph(source)
        k = require_connected_regular(g)
        bound = delsarte_bound(k, spectrum(g, config=config).values[-1], config.delsarte_integer_tol)
        cliques = maximal_cliques(g, config.clique_cap)
        result = geometric_decomposition(g, config)
        logger.info(f"{g}: {result.status.value} after {result.search_nodes} search nodes")

    table = Table(title=str(g), show_header=True, header_style="bold magenta", box=box.SQUARE)
    table.add_column("Property")
    table.add_column("Value")
    table.add_row("Clique number", str(cliques.clique_number))
    table.add_row("Delsarte bound 1 - k/theta_d", f"{bound.bound:.6g}")
    table.add_row("Delsarte cliques", str(result.delsarte_cliques))
    table.add_row("Search nodes", str(result.search_nodes))
    colour = "green" if result.status is GeometricStatus.GEOMETRIC else "yellow"
    table.add_row("Status", f"[{colour}]{result.status.value}[/{colour}] ({result.reason})")
    if result.cover is not None:
        dual = dual_graph(result.cover, g)
        table.add_row("Lines", str(len(result.cover.lines)))
        table.add_row("Dual graph", f"{dual} {encode_graph6(dual)}")
    console.print(table)

    if show_lines and result.cover is not None:
        for line in result.cover.lines:
            console.print(" ".join(map(str, line)))