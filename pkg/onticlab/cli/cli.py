#!/usr/bin/env python3
"""
onticlab CLI - reproducible experiments on ontological models of quantum states
"""

from pathlib import Path
from typing import Callable, NoReturn, Optional

import click
import typer
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from typer.core import TyperGroup

from onticlab.sdk.common import __version__, config, load_config, logger, setup_logging
from onticlab.sdk.common.enums import ExitCode, ExperimentName, OutputFormat
from onticlab.sdk.common.exceptions import OnticLabError
from onticlab.sdk.core import ExperimentConfig, parse_config, run
from onticlab.sdk.experiments import ExperimentManager
from onticlab.sdk.models.modelFactory import ModelFactory
from onticlab.sdk.models.ontic.tableIO import export_table
from onticlab.sdk.quantum.stateVector import state_from_bloch

console = Console()
err_console = Console(stderr=True)


class OnticLabGroup(TyperGroup):
    """Bad flags and unknown commands exit with the configuration error code"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = int(ExitCode.CONFIG_ERROR)
            raise


app = typer.Typer(
    name="onticlab",
    cls=OnticLabGroup,
    help="Numerical laboratory for ontological models of quantum states",
    no_args_is_help=True,
    rich_markup_mode="rich"
)


def init_onticlab(settings: Optional[Path] = None, verbose: bool = False) -> None:
    """Load global settings and configure logging"""
    load_config(str(settings) if settings else None)
    setup_logging(config()["logging"]["level"])
    if verbose:
        setup_logging("DEBUG")


def fail(error: OnticLabError) -> NoReturn:
    err_console.print(f"[red]Error: {escape(error.get_error_msg())}[/red]")
    raise typer.Exit(int(error.exit_code))


def build_config(experiment: ExperimentName, config_file: Optional[Path], out: Optional[str],
                 output_format: Optional[OutputFormat], seed: Optional[int],
                 workers: Optional[int]) -> ExperimentConfig:
    """Config file values, then global settings, then command-line flags"""
    base = parse_config(config_file) if config_file else ExperimentConfig()
    if config_file and "experiment" in base.model_fields_set and base.experiment is not experiment:
        logger.warning(f"{config_file} names experiment '{base.experiment.value}', running '{experiment.value}'")

    if workers is None and "workers" not in base.model_fields_set:
        workers = int(config()["numerics"]["workers"])

    return base.with_overrides(experiment=experiment, output_path=out, format=output_format,
                               seed=seed, workers=workers)


def make_experiment_command(experiment: ExperimentName, description: str) -> Callable[..., None]:
    def command(
        config_file: Optional[Path] = typer.Option(None, "-c", "--config", help="Experiment config (key=value)"),
        out: Optional[str] = typer.Option(None, "-o", "--out", help="Report path"),
        output_format: Optional[OutputFormat] = typer.Option(None, "-f", "--format", help="Report format"),
        seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the random state pairs"),
        workers: Optional[int] = typer.Option(None, "-w", "--workers", help="Quadrature threads"),
        settings: Optional[Path] = typer.Option(None, "--settings", help="Global YAML settings file"),
        verbose: bool = typer.Option(False, "-v", "--verbose", help="Enable verbose logging")
    ):
        init_onticlab(settings, verbose)
        try:
            experiment_config = build_config(experiment, config_file, out, output_format, seed, workers)
            report = run(experiment_config)
        except OnticLabError as e:
            fail(e)

        console.print(Panel(
            f"[green]✓ {experiment.value} finished[/green]\n\n"
            f"Rows: {len(report.rows)}\n"
            f"Report: {experiment_config.resolved_output_path}",
            title="Experiment Result",
            border_style="green"
        ))

    command.__doc__ = description
    return command


for _name, _info in ExperimentManager().list_experiments().items():
    app.command(_name)(make_experiment_command(ExperimentName.from_name(_name), _info["description"]))


@app.command("list")
def list_experiments():
    """List all registered experiments"""
    table = Table(title="Available Experiments")
    table.add_column("Experiment", style="cyan")
    table.add_column("Description")
    table.add_column("Columns", style="green")

    for name, info in ExperimentManager().list_experiments().items():
        table.add_row(name, info["description"], ", ".join(info["columns"]))

    console.print(table)


@app.command("table")
def export_model_table(
    psi_theta: float = typer.Option(0.0, "--psi-theta", help="Polar angle of the prepared state"),
    psi_phi: float = typer.Option(0.0, "--psi-phi", help="Azimuth of the prepared state"),
    phi_theta: float = typer.Option(0.0, "--phi-theta", help="Polar angle of the measured outcome"),
    phi_phi: float = typer.Option(0.0, "--phi-phi", help="Azimuth of the measured outcome"),
    grid_theta: int = typer.Option(200, "--grid-theta", help="Polar resolution"),
    grid_phi: int = typer.Option(400, "--grid-phi", help="Azimuthal resolution"),
    oversample: int = typer.Option(1, "--oversample", help="Sub-cells per cell along each axis"),
    model_name: str = typer.Option("ks", "-m", "--model", help="Registered ontological model"),
    out: Path = typer.Option(Path("results/ks_table.csv"), "-o", "--out", help="Table path"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="Enable verbose logging")
):
    """Export μ(ψ|λ) and ξ(φ|λ) of an ontological model as a CSV table"""
    init_onticlab(verbose=verbose)
    try:
        model = ModelFactory().get_model(model_name, n_theta=grid_theta, n_phi=grid_phi, oversample=oversample)
    except KeyError as e:
        err_console.print(f"[red]Error: {escape(e.args[0])}[/red]")
        raise typer.Exit(int(ExitCode.CONFIG_ERROR))

    try:
        path = export_table(out, model.mu_of(state_from_bloch(psi_theta, psi_phi)),
                            model.xi_of(state_from_bloch(phi_theta, phi_phi)))
    except OnticLabError as e:
        fail(e)

    console.print(f"[green]✓[/green] Wrote {model.grid.count} grid points to {path}")


@app.command("version")
def show_version():
    """Show onticlab version"""
    console.print(f"[bold blue]onticlab[/bold blue] version [green]{__version__}[/green]")
    console.print("Numerical laboratory for ontological models of quantum states")


@app.callback()
def main():
    """
    onticlab - reproducible experiments on ontological models of quantum states
    """
    pass


def cli_main():
    """Entry point for the CLI"""
    app()


if __name__ == "__main__":
    cli_main()
