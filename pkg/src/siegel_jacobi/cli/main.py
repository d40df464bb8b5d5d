"""Siegel–Jacobi CLI — certified theta series and Jacobi group checks."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn

from siegel_jacobi import __version__

console = Console(stderr=True)

app = typer.Typer(
    name="siegel-jacobi",
    help="Siegel–Jacobi — Jacobi group arithmetic and certified theta series.",
    no_args_is_help=True,
)


def _version_callback(value: bool) -> None:
    """Print the version and exit."""
    if value:
        console.print(f"Siegel–Jacobi v{__version__}")
        raise typer.Exit()


def _configure_logging(verbose: bool) -> None:
    if not verbose:
        return
    from rich.logging import RichHandler

    logging.basicConfig(
        level=logging.DEBUG,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


@app.callback()
def main(
    version: Optional[bool] = typer.Option(  # noqa: N803
        None,
        "--version",
        "-v",
        help="Show version and exit.",
        callback=_version_callback,
        is_eager=True,
    ),
) -> None:
    """Siegel–Jacobi — Jacobi group arithmetic and certified theta series."""


@app.command()
def run(
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", help="Job file (key = value lines)."
    ),
    task: Optional[str] = typer.Option(None, "--task", help="Task name; overrides the job file."),
    eps: Optional[float] = typer.Option(None, "--eps", help="Theta truncation accuracy."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for random inputs."),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", help="Report path prefix; writes <out>.json and <out>.txt."
    ),
    threads: int = typer.Option(1, "--threads", help="Worker threads for batch checks."),
    verbose: bool = typer.Option(False, "--verbose", help="Log progress and measurements."),
) -> None:
    """Run one job and write its report."""
    from siegel_jacobi.config.job import load_job, parse_job_file
    from siegel_jacobi.core.errors import (
        AliasingError,
        ConfigError,
        GridPreconditionError,
        SingularDenominatorError,
        ThetaResourceError,
    )
    from siegel_jacobi.core.reports import build_meta, write_report
    from siegel_jacobi.core.runner import run_job

    _configure_logging(verbose)
    overrides = {"task": task, "eps": eps, "seed": seed, "output": out, "threads": threads}
    try:
        job = parse_job_file(config, **overrides) if config else load_job({}, **overrides)
    except ConfigError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=2)

    try:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
            transient=True,
        ) as progress:
            spinner = progress.add_task("Starting...", total=None)

            def on_progress(phase: str, pct: float) -> None:
                progress.update(spinner, description=f"{phase} ({pct:.0%})")

            result = run_job(job, progress_callback=on_progress)
    except ThetaResourceError as e:
        console.print(f"[red]Error:[/red] {e}")
        console.print(
            f"  Terms needed:   {e.terms_needed}\n"
            f"  Reachable tail: {e.partial_tail_bound:.3e}"
        )
        raise typer.Exit(code=3)
    except (AliasingError, GridPreconditionError, SingularDenominatorError) as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=1)
    except ValueError as e:
        console.print(f"[red]Error:[/red] invalid job: {e}")
        raise typer.Exit(code=2)

    json_path, txt_path = write_report(
        job.output, result.body, build_meta(__version__, result.duration_seconds)
    )

    status = "[bold green]PASS[/bold green]" if result.passed else "[bold red]FAIL[/bold red]"
    console.print(f"{status} {job.task.value}")
    console.print(f"  Results:        {len(result.body['results'])}")
    console.print(f"  Asserted:       {result.body['asserted']}")
    if result.failures > 0:
        console.print(f"  Failed:         {result.failures}")
    console.print(f"  Duration:       {result.duration_seconds:.2f}s")
    console.print(f"  Report:         {json_path}, {txt_path}")

    if not result.passed:
        raise typer.Exit(code=1)


@app.command()
def tasks() -> None:
    """List the available tasks."""
    from siegel_jacobi.config.job import TASK_DESCRIPTIONS

    for task, description in TASK_DESCRIPTIONS.items():
        console.print(f"  [bold]{task.value:<24}[/bold] {description}")
