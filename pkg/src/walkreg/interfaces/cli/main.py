import logging
from pathlib import Path

import typer

from ...config_manager import ConfigManager
from ...utils.logging import WALKREG_MODULES, LogConfig, get_logger
from .commands.analyze import analyze_command
from .commands.catalog import catalog_command
from .commands.common import err_console, exit_on_error
from .commands.construct import construct_command
from .commands.diagram import diagram_command
from .commands.geometry import geometry_command

# Enable early debug logging
early_debug_enabled = LogConfig.check_early_debug()

app = typer.Typer(help="Walk-regularity analysis of finite graphs", no_args_is_help=True)

app.command("analyze")(analyze_command)
app.command("construct")(construct_command)
app.command("catalog")(catalog_command)
app.command("geometry")(geometry_command)
app.command("diagram")(diagram_command)

logger = get_logger(__name__)


def enable_full_debug_logging(debug: bool):
    """Enable debug logging for every walkreg module"""
    if debug:
        logging.getLogger().setLevel(logging.DEBUG)
        for module in WALKREG_MODULES:
            logging.getLogger(module).setLevel(logging.DEBUG)
        err_console.print("[yellow]Full debug mode enabled across all modules[/yellow]")
        logger.debug("Comprehensive debug logging enabled")


@app.callback()
def main(
    ctx: typer.Context,
    config_file: Path = typer.Option(None, "--config", "-c", help="Path to configuration file"),
    debug: bool = typer.Option(False, "--debug", help="Enable debug mode"),
    log_file: bool = typer.Option(True, "--log-file/--no-log-file", help="Also log to logs/walkreg_<date>.log"),
):
    """
    walkreg: walk-regularity orders, spectra, constructions and bound checks for graphs
    """
    if not LogConfig._is_setup:
        LogConfig.setup(debug=debug or early_debug_enabled, log_to_file=log_file)

    if debug:
        enable_full_debug_logging(debug)

    ctx.obj = {"debug": debug}
    with exit_on_error():
        ctx.obj["config"] = ConfigManager(config_file).load()
    logger.debug(f"Configuration: {ctx.obj['config']}")


if __name__ == "__main__":
    app()
