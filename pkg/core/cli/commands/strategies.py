"""List and describe the registered strategies."""

import json

import typer
from rich.console import Console
from rich.json import JSON
from rich.panel import Panel
from rich.table import Table

from ...given import ROSTER, StrategyRegistry
from ...utils.exceptions import UnknownStrategyError

app = typer.Typer(
    name="strategies",
    help="List the knowledge-integration strategies",
    invoke_without_command=True,
)

console = Console()


def _ordered():
    known = {s.name: s for s in StrategyRegistry.list_all()}
    ordered = [known[name] for name in ROSTER if name in known]
    return ordered + [s for name, s in sorted(known.items()) if name not in ROSTER]


@app.callback()
def list_strategies(
    ctx: typer.Context,
    kind: str | None = typer.Option(None, help="Filter by kind (basic, bounds, stutter)"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """List all registered strategies in roster order."""
    if ctx.invoked_subcommand is not None:
        return
    strategies = [s for s in _ordered() if kind is None or s.kind == kind]

    if not strategies:
        console.print("[yellow]No strategies found[/yellow]")
        return

    if json_output:
        data = [
            {"name": s.name, "kind": s.kind, "precise": s.precise, "aliases": s.aliases, "description": s.description}
            for s in strategies
        ]
        console.print(JSON(json.dumps(data, indent=2, ensure_ascii=False)))
        return

    table = Table(title="[bold cyan]Strategies[/bold cyan]", show_header=True)
    table.add_column("Name", style="cyan")
    table.add_column("Kind")
    table.add_column("Precise", justify="center")
    table.add_column("Description")
    for s in strategies:
        name = s.name + (f" ({', '.join(s.aliases)})" if s.aliases else "")
        table.add_row(name, s.kind, "✓" if s.precise else "", s.description)
    console.print(table)
    console.print("[dim]Combine stages with '+', e.g. SIrelax+BM[/dim]")


@app.command(name="show")
def show_strategy(name: str = typer.Argument(..., help="Strategy name or alias")):
    """Show one strategy, or the stages of a combined name."""
    try:
        stages = StrategyRegistry.resolve(name)
    except UnknownStrategyError as e:
        console.print(f"[red]Error: {e.message}[/red]")
        console.print("\n[yellow]Available strategies:[/yellow]")
        for s in _ordered():
            console.print(f"  • {s.name}")
        raise typer.Exit(1) from e

    for s in stages:
        console.print(Panel(f"[bold blue]{s.name}[/bold blue]", title="Strategy"))
        console.print(f"[bold]Description:[/bold] {s.description}")
        console.print(f"[bold]Kind:[/bold] {s.kind}")
        console.print(f"[bold]Precise:[/bold] {s.precise}")
        if s.aliases:
            console.print(f"[bold]Aliases:[/bold] {', '.join(s.aliases)}")
