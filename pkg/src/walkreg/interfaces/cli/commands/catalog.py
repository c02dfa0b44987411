"""The `catalog` command: named graph families."""
from pathlib import Path
from typing import List, Optional

import typer
from rich import box
from rich.table import Table

from ....graph_core.catalog import ALIASES, CATALOG, catalog
from ....graph_core.graph_io import encode_graph6, encode_json_edges
from .common import console, exit_on_error


def display_catalog() -> None:
    table = Table(show_header=True, header_style="bold magenta", box=box.DOUBLE_EDGE)
    table.add_column("Name")
    table.add_column("Parameters")
    table.add_column("Aliases")
    table.add_column("Description")
    for name in sorted(CATALOG):
        entry = CATALOG[name]
        aliases = ", ".join(sorted(alias for alias, target in ALIASES.items() if target == name))
        table.add_row(name, " ".join(entry.params), aliases, entry.description)
    console.print(table)


def catalog_command(
    name: Optional[str] = typer.Argument(None, help="Family name or alias"),
    params: Optional[List[int]] = typer.Argument(None, help="Integer parameters of the family"),
    fmt: str = typer.Option("graph6", "--format", "-f", help="Output format: graph6 or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the graph here instead of stdout"),
    list_all: bool = typer.Option(False, "--list", "-l", help="List the available families"),
):
    """Print a catalog graph in graph6 (or JSON)."""
    if list_all or name is None:
        display_catalog()
        return

    with exit_on_error():
        g = catalog(name, params or [])

    text = (encode_json_edges(g) if fmt == "json" else encode_graph6(g)) + "\n"
    if out is not None:
        out.write_text(text, encoding="utf-8")
        console.print(f"Wrote {g} to [bold]{out}[/bold]")
    else:
        typer.echo(text, nl=False)
