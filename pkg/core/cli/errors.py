"""Exit codes and error reporting shared by the CLI commands."""

from collections.abc import Iterator
from contextlib import contextmanager

import typer
from rich.console import Console

from ..utils.exceptions import GivenThatError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EMPTY = 10
EXIT_UNIVERSAL = 20

console = Console(stderr=True)


@contextmanager
def user_errors() -> Iterator[None]:
    """Report toolkit errors on stderr and exit with ``EXIT_ERROR``."""
    try:
        yield
    except GivenThatError as e:
        console.print(f"[red]Error ({e.category}):[/red] {e.message}")
        raise typer.Exit(EXIT_ERROR) from e
