"""The `analyze` command: full report for one graph."""
from pathlib import Path
from typing import Optional

import typer
from rich import box
from rich.table import Table

from ....bounds_report import analyze, report_json
from ....graph_core.graph_io import read_graph
from ....models.report import AnalysisReport
from ....utils.logging import get_logger
from .common import console, err_console, exit_on_error, format_order, get_config

logger = get_logger(__name__)


def display_report(report: AnalysisReport, to_stderr: bool = False) -> None:
    """Summary table of an analysis report."""
    table = Table(title=report.graph.name or report.graph.graph6, show_header=True, header_style="bold magenta", box=box.DOUBLE_EDGE)
    table.add_column("Property")
    table.add_column("Value")

    metrics = report.metrics
    table.add_row("Vertices / edges", f"{report.graph.n} / {report.graph.edges}")
    table.add_row("Valency", str(metrics.get("valency")))
    table.add_row("Diameter", str(metrics.get("diameter")))
    table.add_row("Girth / odd girth", f"{metrics.get('girth')} / {metrics.get('odd_girth')}")

    if report.skipped:
        table.add_row("Skipped", f"{', '.join(report.skipped)} ({report.skip_reason})")
    if report.walk is not None:
        table.add_row("Walk-regularity order", format_order(report.walk["order"]))
        table.add_row("Distinct eigenvalues", str(report.walk["d"] + 1))
        drg = report.walk["distance_regular"]
        array = report.walk.get("intersection_array")
        text = "yes" if drg else "no"
        if array:
            text += " {" + ",".join(map(str, array["b"])) + ";" + ",".join(map(str, array["c"])) + "}"
        table.add_row("Distance-regular", text)
    if report.spectrum is not None:
        pairs = ", ".join(f"{e['value']:.6g}^{e['multiplicity']}" for e in report.spectrum["eigenvalues"])
        table.add_row("Spectrum", pairs)
    if report.bounds is not None:
        table.add_row("Bounds", "[green]all pass[/green]" if report.bounds.all_passed() else "[red]failures[/red]")
    if report.cliques is not None:
        table.add_row("Clique number / Delsarte bound", f"{report.cliques.get('clique_number')} / {report.cliques['delsarte_bound']:.6g}")
    if report.geometry is not None:
        table.add_row("Geometric", str(report.geometry.get("status")))

    (err_console if to_stderr else console).print(table)


def analyze_command(
    ctx: typer.Context,
    source: str = typer.Argument(..., help="Graph file (graph6 or JSON edge list), '-' for stdin"),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help="Input format: graph6 or json (auto-detected)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the JSON report here instead of stdout"),
    max_n: Optional[int] = typer.Option(None, "--max-n", help="Largest accepted vertex count"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Skip the summary table"),
):
    """Analyse a graph and emit the JSON verification report."""
    config = get_config(ctx)
    if max_n is not None:
        config = config.model_copy(update={"max_n": max_n})

    with exit_on_error():
        g = read_graph(source, fmt)
        logger.info(f"Analysing {g}")
        report = analyze(g, config)
        text = report_json(report, config.float_digits)

    if out is not None:
        out.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {out}")
        if not quiet:
            display_report(report)
            console.print(f"Report written to [bold]{out}[/bold]")
    else:
        typer.echo(text, nl=False)
        if not quiet:
            display_report(report, to_stderr=True)
