"""The `diagram` command: distance distribution diagram as DOT."""
from pathlib import Path
from typing import Optional

import typer

from ....bounds_report import emit_diagram
from ....graph_core.graph_io import read_graph
from .common import console, exit_on_error


def diagram_command(
    source: str = typer.Argument(..., help="Graph file (graph6 or JSON edge list), '-' for stdin"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the DOT text here instead of stdout"),
):
    """Emit the distance distribution diagram of a connected graph."""
    with exit_on_error():
        g = read_graph(source)
        text = emit_diagram(g)

    if out is not None:
        out.write_text(text, encoding="utf-8")
        console.print(f"Diagram written to [bold]{out}[/bold]")
    else:
        typer.echo(text, nl=False)
