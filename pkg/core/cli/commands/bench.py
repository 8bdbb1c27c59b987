"""Bench command: problems × strategies to CSV, with summary tables."""

import sys
from pathlib import Path

import typer
from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from ...bench import CsvSink, generate_problems, load_problems, render_summary, run_bench, summarize
from ...given import ROSTER
from ..errors import EXIT_ERROR, user_errors

console = Console(stderr=True)


def bench(
    problems: Path | None = typer.Option(None, "--problems", help="Problem YAML file or directory"),
    strategies: str = typer.Option(",".join(ROSTER), "--strategies", help="Comma-separated strategy names"),
    timeout: int | None = typer.Option(None, "--timeout", help="Per-row timeout in ms (default from settings)"),
    csv_path: Path | None = typer.Option(None, "--csv", help="CSV output file (default stdout)"),
    workers: int | None = typer.Option(None, "--workers", help="Concurrent rows (default from settings)"),
    generate: int | None = typer.Option(None, "--generate", help="Use N generated problems instead of --problems"),
    seed: int = typer.Option(0, "--seed", help="Seed of the generated corpus"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Skip progress and summary tables"),
) -> None:
    """Run every problem under every strategy and write one CSV row each."""
    if (problems is None) == (generate is None):
        console.print("[red]Error: give exactly one of --problems and --generate[/red]")
        raise typer.Exit(EXIT_ERROR)
    names = [s.strip() for s in strategies.split(",") if s.strip()]
    with user_errors():
        corpus = load_problems(problems) if problems is not None else generate_problems(generate or 0, seed)
        rows = _run(corpus, names, timeout, workers, csv_path, quiet)

    if not quiet:
        render_summary(summarize(rows), console)
        if csv_path:
            console.print(f"[green]✓[/green] {len(rows)} rows written to {csv_path}")


def _run(corpus, names, timeout, workers, csv_path, quiet):
    stream = csv_path.open("w", newline="", encoding="utf-8") if csv_path else sys.stdout
    try:
        sink = CsvSink(stream)
        if quiet:
            rows = run_bench(corpus, names, timeout, workers, sink)
        else:
            with Progress(
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                MofNCompleteColumn(),
                console=console,
            ) as progress:
                task = progress.add_task("bench", total=len(corpus) * len(names))
                rows = run_bench(corpus, names, timeout, workers, sink, on_row=lambda _: progress.advance(task))
    finally:
        if csv_path:
            stream.close()
    return rows
