"""The `construct` command: build new graphs from old ones."""
from pathlib import Path
from typing import List, Optional

import typer
from rich import box
from rich.table import Table

from ....constructions import CONSTRUCTIONS, run_construction, spectra_match, verify_guarantee
from ....constructions.common import input_spectrum, is_connected_graph
from ....graph_core.graph_io import encode_graph6, encode_json_edges, read_graph
from ....models.construction import ConstructionResult
from ....utils.logging import get_logger
from .common import console, err_console, exit_on_error, format_order, parse_params

logger = get_logger(__name__)


def _spectrum_status(result: ConstructionResult) -> str:
    g = result.graph
    if result.predicted_spectrum is None:
        return "-"
    if not is_connected_graph(g) or not g.is_regular():
        return "n/a"
    return "[green]match[/green]" if spectra_match(result.predicted_spectrum, input_spectrum(g)) else "[red]differs[/red]"


def display_constructions(results: List[ConstructionResult], orders: List[Optional[int]]) -> None:
    table = Table(show_header=True, header_style="bold magenta", box=box.SQUARE)
    table.add_column("Construction")
    table.add_column("Vertices")
    table.add_column("Edges")
    table.add_column("Guaranteed order")
    table.add_column("Exact order")
    table.add_column("Predicted spectrum")
    for result, order in zip(results, orders):
        table.add_row(
            result.construction,
            str(result.graph.n),
            str(result.graph.size),
            format_order(result.guaranteed_order),
            "disconnected" if result.disconnected else format_order(order),
            _spectrum_status(result),
        )
    err_console.print(table)


def construct_command(
    operation: str = typer.Argument(..., help=f"One of: {', '.join(sorted(CONSTRUCTIONS))}"),
    sources: List[str] = typer.Argument(..., help="Input graph file(s)"),
    param: Optional[List[str]] = typer.Option(None, "--param", "-p", help="Construction parameter, e.g. s=2"),
    fmt: str = typer.Option("graph6", "--format", "-f", help="Output format: graph6 or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the output graph(s) here"),
):
    """Apply a construction and check its walk-regularity guarantee."""
    with exit_on_error():
        params = parse_params(param)
        graphs = [read_graph(source) for source in sources]
        results = run_construction(operation, graphs, params)
        orders = [verify_guarantee(result) for result in results]

    encode = encode_json_edges if fmt == "json" else encode_graph6
    text = "".join(encode(result.graph) + "\n" for result in results)
    if out is not None:
        out.write_text(text, encoding="utf-8")
        console.print(f"Wrote {len(results)} graph(s) to [bold]{out}[/bold]")
    else:
        typer.echo(text, nl=False)
    display_constructions(results, orders)
    logger.info(f"{operation}: built {len(results)} graph(s)")
