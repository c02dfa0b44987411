"""Helpers shared by the CLI commands: exit codes, parameter parsing and config access."""
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional

import typer
from rich.console import Console

from ....config_manager import AnalysisConfig
from ....errors import (
    BudgetExceeded,
    ConstancyError,
    GraphInputError,
    NumericalError,
    PreconditionError,
    TheoremViolation,
)
from ....utils.logging import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_BUDGET = 3

console = Console()
err_console = Console(stderr=True)


def get_config(ctx: typer.Context) -> AnalysisConfig:
    if ctx.obj and "config" in ctx.obj:
        return ctx.obj["config"]
    return AnalysisConfig()


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Map walkreg errors onto the CLI exit codes."""
    try:
        yield
    except TheoremViolation as e:
        logger.error(f"Theorem violation: {e}; witness {e.witness}")
        err_console.print(f"[bold red]THEOREM VIOLATION:[/] {e}")
        for key, value in e.witness.items():
            err_console.print(f"  {key}: {value}")
        raise typer.Exit(EXIT_VIOLATION)
    except NumericalError as e:
        logger.error(f"Numerical error: {e}")
        err_console.print(f"[bold red]NUMERICAL ERROR:[/] {e}")
        raise typer.Exit(EXIT_VIOLATION)
    except BudgetExceeded as e:
        logger.warning(f"Budget exhausted: {e}")
        err_console.print(f"[yellow]Budget exhausted:[/] {e}")
        raise typer.Exit(EXIT_BUDGET)
    except (GraphInputError, PreconditionError, ConstancyError) as e:
        logger.error(f"Input error: {e}")
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_INPUT)


def parse_params(values: Optional[List[str]]) -> Dict[str, int]:
    """Turn ['s=2', 'i=3'] into {'s': 2, 'i': 3}."""
    params: Dict[str, int] = {}
    for item in values or []:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise GraphInputError(f"Parameter '{item}' is not of the form name=value")
        try:
            params[key.strip()] = int(raw)
        except ValueError:
            raise GraphInputError(f"Parameter '{key}' needs an integer value, got '{raw}'")
    return params


def format_order(order: Optional[int]) -> str:
    return "none" if order is None else str(order)
