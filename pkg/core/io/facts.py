"""Fact files: one LTL formula per line, ``#`` comments, blank lines ignored."""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from core.ltl import Formula, parse
from core.sysmc.seekers import Fact
from core.utils.exceptions import FactFileError, LtlSyntaxError


def parse_facts(text: str, source: str = "<string>") -> list[Formula]:
    """Formulas in file order.

    Raises:
        FactFileError: If a line is not valid LTL; carries the line number.
    """
    facts: list[Formula] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            facts.append(parse(body))
        except LtlSyntaxError as exc:
            raise FactFileError(
                f"{source}:{line_no}: {exc.message}",
                details={"line": line_no, "source": source, "position": exc.position},
            ) from exc
    return facts


def read_facts(path: str | Path) -> list[Formula]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise FactFileError(f"cannot read {p}: {exc.strerror}", details={"source": str(p)}) from exc
    return parse_facts(text, source=str(p))


def format_facts(facts: Iterable[Fact | Formula]) -> str:
    """Fact file text; seeker facts are preceded by a comment naming their evidence."""
    lines: list[str] = []
    for fact in facts:
        if isinstance(fact, Fact):
            lines.append(f"# {fact.kind.value}: {fact.evidence}" if fact.evidence else f"# {fact.kind.value}")
            lines.append(fact.text)
        else:
            lines.append(str(fact))
    return "\n".join(lines) + "\n" if lines else ""


def write_facts(facts: Iterable[Fact | Formula], path: str | Path) -> None:
    Path(path).write_text(format_facts(facts), encoding="utf-8")
