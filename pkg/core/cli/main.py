"""Main CLI entrypoint for giventhat.

Machine-readable output (HOA, fact files, CSV, JSON reports) goes to stdout;
logs, tables and messages go to stderr.

Exit codes of ``given``: 10 when the result is empty (the property is proven
given the facts), 20 when it is universal (the property fails on every
non-empty system satisfying the facts), 0 otherwise. Any error exits with 1.
"""

import json
import sys
from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from .. import __version__
from ..automaton import stats as automaton_stats
from ..boolfn import BddManager
from ..config import get_settings, override_settings
from ..given import KnowledgeBase, Outcome, StrategyOptions, run_strategy
from ..io import format_facts, hoa_print, read_facts, read_hoa, read_kts, write_facts
from ..ltl import negate, parse
from ..sysmc import model_check, seek_all
from ..translate import simplify, translate
from ..utils.logging import setup_logging
from .commands import bench as bench_command
from .commands import strategies
from .errors import EXIT_EMPTY, EXIT_ERROR, EXIT_UNIVERSAL, user_errors

app = typer.Typer(
    name="giventhat",
    help="Simplify negated-property automata using knowledge about the system",
    no_args_is_help=True,
    add_completion=False,
)

console = Console(stderr=True)

app.add_typer(strategies.app, name="strategies", help="List the knowledge-integration strategies")
app.command(name="bench")(bench_command.bench)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        console.print(f"[green]✓[/green] wrote {out}")


@app.callback()
def configure(
    log_level: str | None = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING, ERROR"),
    log_json: bool = typer.Option(False, "--log-json", help="Emit logs as JSON lines"),
    node_cap: int | None = typer.Option(None, "--node-cap", help="BDD node cap"),
    state_cap: int | None = typer.Option(None, "--state-cap", help="Translator state cap"),
    complement_cap: int | None = typer.Option(None, "--complement-cap", help="Generic complementation state cap"),
):
    """Apply flag overrides on top of GIVENTHAT_* environment settings."""
    with user_errors():
        try:
            override_settings(
                log_level=log_level,
                bdd_node_cap=node_cap,
                translate_state_cap=state_cap,
                complement_state_cap=complement_cap,
            )
        except ValueError as e:
            console.print(f"[red]Error: invalid option: {e}[/red]")
            raise typer.Exit(EXIT_ERROR) from e
        settings = get_settings()
        setup_logging(level=settings.log_level, json_logs=log_json or settings.log_json)


@app.command()
def version():
    """Show version information."""
    console.print(f"[bold blue]giventhat[/bold blue] version {__version__}")
    console.print(f"[dim]Python {sys.version.split()[0]}[/dim]")


@app.command(name="translate")
def translate_command(
    formula: str = typer.Option(..., "--formula", "-f", help="LTL formula"),
    negate_formula: bool = typer.Option(False, "--negate", help="Translate the negation instead"),
    out: Path | None = typer.Option(None, "-o", "--out", help="HOA output file (default stdout)"),
):
    """Translate an LTL formula to a simplified TGBA in HOA format."""
    with user_errors():
        phi = parse(formula)
        target = negate(phi) if negate_formula else phi
        _emit(hoa_print(simplify(translate(target))), out)


@app.command()
def given(
    formula: str = typer.Option(..., "--formula", "-f", help="Property φ"),
    facts: Path = typer.Option(..., "--facts", help="Fact file, one LTL formula per line"),
    strategy: str = typer.Option("BM", "--strategy", "-s", help="Strategy name, '+' combines stages"),
    report: str | None = typer.Option(None, "--report", help="Report format; only 'json' is supported"),
    out: Path | None = typer.Option(None, "-o", "--out", help="HOA output file"),
):
    """Simplify the automaton of ¬φ given facts known to hold on the system."""
    if report not in (None, "json"):
        console.print(f"[red]Error: unsupported report format {report!r}[/red]")
        raise typer.Exit(EXIT_ERROR)
    with user_errors():
        phi = parse(formula)
        kb = KnowledgeBase.from_formulas(read_facts(facts), BddManager(), source=str(facts))
        automaton, result = run_strategy(strategy, phi, kb, StrategyOptions())

    if report == "json":
        payload = {"tool": "giventhat", "version": __version__, "report": result.model_dump(mode="json")}
        typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))
        if out is not None:
            _emit(hoa_print(automaton), out)
    else:
        _emit(hoa_print(automaton), out)
        console.print(
            f"[bold]{result.outcome.value}[/bold] {result.before.states}→{result.after.states} states, "
            f"{result.before.transitions}→{result.after.transitions} transitions"
            + (f" [yellow]({', '.join(result.flags)})[/yellow]" if result.flags else "")
        )

    if result.outcome is Outcome.EMPTY:
        raise typer.Exit(EXIT_EMPTY)
    if result.outcome is Outcome.UNIVERSAL:
        raise typer.Exit(EXIT_UNIVERSAL)


@app.command(name="stats")
def stats_command(
    hoa_in: Path = typer.Option(..., "--in", help="HOA automaton"),
    neg_formula: str | None = typer.Option(None, "--neg-formula", help="LTL formula of the complement, for SI"),
    table: bool = typer.Option(False, "--table", help="Show a table instead of JSON"),
):
    """Size, shape and stutter-insensitivity of an automaton."""
    with user_errors():
        mgr = BddManager()
        a = read_hoa(hoa_in, mgr)
        neg = simplify(translate(parse(neg_formula), mgr)) if neg_formula else None
        result = automaton_stats(a, neg=neg, complement_cap=get_settings().complement_state_cap if neg is None else None)

    if not table:
        typer.echo(result.model_dump_json(indent=2))
        return
    t = Table(title=f"[bold cyan]{hoa_in.name}[/bold cyan]", show_header=True)
    t.add_column("Metric", style="cyan")
    t.add_column("Value", justify="right")
    for key, value in result.model_dump(mode="json").items():
        t.add_row(key, str(value))
    Console().print(t)


@app.command()
def seek(
    system: Path = typer.Option(..., "--system", help="KTS system file"),
    formula: str = typer.Option(..., "--formula", "-f", help="Property whose atoms restrict the facts"),
    out: Path | None = typer.Option(None, "-o", "--out", help="Fact file output (default stdout)"),
):
    """Glean facts about a system, restricted to the atoms of φ."""
    with user_errors():
        found = seek_all(read_kts(system), parse(formula))
    if out is None:
        typer.echo(format_facts(found), nl=False)
    else:
        write_facts(found, out)
        console.print(f"[green]✓[/green] {len(found)} facts written to {out}")


@app.command()
def check(
    system: Path = typer.Option(..., "--system", help="KTS system file"),
    formula: str = typer.Option(..., "--formula", "-f", help="Property φ"),
    facts: Path | None = typer.Option(None, "--facts", help="Fact file; facts are sought when omitted"),
    strategy: str = typer.Option("raw", "--strategy", "-s", help="Strategy applied before the check"),
    gate: bool = typer.Option(False, "--gate", help="Answer 'holds' early when p.min∃ is empty"),
):
    """Model check φ on a system, optionally simplifying ¬φ with knowledge first."""
    with user_errors():
        s = read_kts(system)
        phi = parse(formula)
        if facts is not None:
            known: list = read_facts(facts)
        elif strategy != "raw" or gate:
            known = seek_all(s, phi)
        else:
            known = []
        verdict, result = model_check(s, phi, known, strategy, gate=gate)

    typer.echo(verdict.status.value)
    if verdict.counterexample is not None:
        typer.echo(f"counterexample: {verdict.counterexample}")
        names = [s.names[q] for q in verdict.path]
        stem = " ".join([*names[: verdict.loop_start], f"({' '.join(names[verdict.loop_start :])})^w"])
        typer.echo(f"path: {stem}")
    elif verdict.reason:
        typer.echo(f"reason: {verdict.reason}")
    console.print(f"[dim]{result.strategy}: {result.outcome.value}, {result.after.states} states[/dim]")


def main():
    """Main CLI entrypoint."""
    try:
        app()
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted by user[/yellow]")
        sys.exit(0)
    except Exception as e:
        console.print(f"[red]Error: {e}[/red]")
        sys.exit(EXIT_ERROR)


if __name__ == "__main__":
    main()
