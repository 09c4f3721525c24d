"""eqgirth command-line interface.

This module provides the CLI for eqgirth. Every registered check is exposed as
a subcommand; ``all`` runs them in sequence. Each run writes a JSON report
(and CSV dumps with ``--output-format csv``) to the output directory and exits
0 when every verified statement holds, 1 when one fails and 2 on invalid
configuration.
"""

import logging
import sys
import time
from pathlib import Path
from typing import Annotated, Any

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

import eqgirth.checks  # noqa: F401  registers the checks
from eqgirth.checks.base import BaseCheck, CheckResult, Report, ReportStorage
from eqgirth.checks.registry import registry
from eqgirth.conf import settings
from eqgirth.conf.global_settings import RunConfig
from eqgirth.exceptions import ConfigError, EquatorGirthError

ALL = "all"
PERTURB = "perturb"

app = typer.Typer(
    name="eqgirth",
    help="Verify the Hofer-distance bounds behind the girth of the space of oriented equators of S².",
    add_completion=False,
)
console = Console()
error_console = Console(stderr=True)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=error_console, show_path=False)],
        force=True,
    )


def _run_config(overrides: dict[str, Any]) -> RunConfig:
    """Merge CLI overrides into the configured run parameters.

    Raises:
        ValidationError: If a merged value is out of range.
    """
    values = settings.RUN.model_dump()
    values.update({key: value for key, value in overrides.items() if value is not None})
    return RunConfig.model_validate(values)


def _print_results(results: list[CheckResult]) -> None:
    table = Table(title="Results")
    table.add_column("name", style="cyan")
    table.add_column("value")
    table.add_column("expected")
    table.add_column("pass")
    for result in results:
        table.add_row(
            result.name,
            str(result.value) if result.error is None else f"[red]{result.error}[/red]",
            "" if result.expected is None else str(result.expected),
            "[green]yes[/green]" if result.passed else "[red]no[/red]",
        )
    console.print(table)


def run(subcommand: str, overrides: dict[str, Any], out: Path | None = None) -> Report:
    """Run a subcommand and write its report.

    Args:
        subcommand: A registered check or ``all``.
        overrides: Run parameters to override (None values are ignored).
        out: Output directory override.

    Returns:
        The written report.

    Raises:
        ValidationError: If the merged configuration is invalid.
        ConfigError: If a check rejects its grid or resolution.
        KeyError: If the subcommand is unknown.
    """
    config = _run_config(overrides)
    settings.RUN = config
    if out:
        settings.OUT_DIR = out

    names = registry.keys() if subcommand == ALL else [subcommand]
    checks: list[BaseCheck] = []
    for name in names:
        check_class = registry.get(name)
        if check_class is None:
            raise KeyError(name)
        checks.append(check_class(config))

    start = time.perf_counter()
    results: list[CheckResult] = []
    tables = {}
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=error_console,
        transient=True,
    ) as progress:
        for check in checks:
            task = progress.add_task(f"Running {check.command}...", total=None)
            check_results = check.run()
            if subcommand == ALL:
                check_results = [r.model_copy(update={"name": f"{check.command}.{r.name}"}) for r in check_results]
            results.extend(check_results)
            if config.output_format == "csv":
                try:
                    tables.update(check.dumps())
                except ConfigError:
                    raise
                except EquatorGirthError as e:
                    error_console.print(f"[yellow]Skipping dumps of {check.command}:[/yellow] {e}")
            progress.update(task, completed=True)
    elapsed = (time.perf_counter() - start) * 1000.0

    report = Report(
        subcommand=subcommand,
        config=config,
        results=results,
        wall_time_ms=elapsed if settings.RECORD_TIMING else None,
    )
    storage = ReportStorage()
    path = storage.write_report(report)
    storage.write_tables(tables)
    _print_results(results)
    console.print(f"[green]✓[/green] Report saved to: {path}")
    return report


def _register_command(subcommand: str, help_text: str) -> None:
    def command(
        delta: Annotated[float | None, typer.Option("--delta", help="Pipe area in (0, 0.1]; for perturb, the graph amplitude unless --amplitude is given")] = None,
        eps: Annotated[float | None, typer.Option("--eps", help="Transition band width in (0, pi/8)")] = None,
        resolution: Annotated[str | None, typer.Option("--resolution", help="Cost grid step, e.g. '1/120'")] = None,
        grid_theta: Annotated[int | None, typer.Option("--grid-theta", help="θ samples of the embedding grid")] = None,
        grid_phi: Annotated[int | None, typer.Option("--grid-phi", help="φ samples of the embedding grid")] = None,
        pipe_slack_mode: Annotated[str | None, typer.Option("--pipe-slack-mode", help="'one_delta' or 'two_delta'")] = None,
        output_format: Annotated[str | None, typer.Option("--output-format", help="'json' or 'csv'")] = None,
        seed: Annotated[int | None, typer.Option("--seed", help="Seed for randomized sampling")] = None,
        r: Annotated[int | None, typer.Option("--r", help="Frequency of the first perturbation graph")] = None,
        s: Annotated[int | None, typer.Option("--s", help="Frequency of the second perturbation graph")] = None,
        amplitude: Annotated[float | None, typer.Option("--amplitude", help="Amplitude of the perturbation graphs")] = None,
        out: Annotated[Path | None, typer.Option("--out", help="Directory for the report and CSV dumps")] = None,
        verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at DEBUG level")] = False,
    ) -> None:
        _configure_logging(verbose)
        if subcommand == PERTURB and amplitude is None:
            amplitude, delta = delta, None
        overrides = {
            "delta": delta,
            "eps": eps,
            "resolution": resolution,
            "grid_theta": grid_theta,
            "grid_phi": grid_phi,
            "pipe_slack_mode": pipe_slack_mode,
            "output_format": output_format,
            "seed": seed,
            "r": r,
            "s": s,
            "amplitude": amplitude,
        }
        try:
            report = run(subcommand, overrides, out)
        except ValidationError as e:
            error_console.print(f"[red]Invalid configuration:[/red]\n{e}")
            sys.exit(2)
        except ConfigError as e:
            error_console.print(f"[red]Invalid configuration:[/red] {e}")
            sys.exit(2)
        sys.exit(0 if report.passed else 1)

    app.command(name=subcommand, help=help_text)(command)


for _name, _check in registry.items():
    _register_command(_name, _check.description)
_register_command(ALL, "Run every check and aggregate the results into one report")


@app.command()
def list_checks() -> None:
    """List all available checks."""
    if not len(registry):
        console.print("[yellow]No checks registered.[/yellow]")
        return

    console.print("[cyan]Available checks:[/cyan]")
    for name, check_class in registry.items():
        console.print(f"  {name}: {check_class.description}")


def main() -> None:
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
