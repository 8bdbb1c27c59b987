"""
KTS: a line-oriented text format for explicit Kripke structures.

    kripke
    ap a b
    state s0 a=1 b=0
    state s1 a=0 b=1
    init s0
    edge s0 s1
    edge s1 s0

Tokens are separated by single spaces; ``#`` starts a comment. Every state
assigns every atom and must be declared before it is referenced.
"""

from __future__ import annotations

from pathlib import Path

from core.sysmc.kripke import Kripke
from core.utils.exceptions import KtsFormatError

HEADER = "kripke"


def _fail(reason: str, line_no: int, source: str) -> KtsFormatError:
    return KtsFormatError(f"{source}:{line_no}: {reason}", details={"line": line_no, "source": source})


def _tokens(line: str, line_no: int, source: str) -> list[str]:
    body = line.split("#", 1)[0].rstrip()
    if not body:
        return []
    tokens = body.split(" ")
    if any(not t for t in tokens):
        raise _fail("tokens must be separated by single spaces", line_no, source)
    return tokens


def parse_kts(text: str, source: str = "<string>") -> Kripke:
    """Parse KTS text.

    Raises:
        KtsFormatError: On malformed lines, partial valuations or references
            to undeclared states; the message carries the line number.
    """
    ap: tuple[str, ...] | None = None
    states: list[tuple[str, set[str]]] = []
    declared: set[str] = set()
    initial: str | None = None
    edges: list[tuple[str, str]] = []
    seen_header = False

    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line, line_no, source)
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        if not seen_header:
            if tokens != [HEADER]:
                raise _fail(f"expected '{HEADER}' header", line_no, source)
            seen_header = True
            continue
        match keyword:
            case "ap":
                if ap is not None:
                    raise _fail("duplicate 'ap' line", line_no, source)
                if len(set(args)) != len(args):
                    raise _fail("duplicate atom", line_no, source)
                ap = tuple(args)
            case "state":
                if ap is None:
                    raise _fail("'state' before 'ap'", line_no, source)
                if not args:
                    raise _fail("'state' needs an identifier", line_no, source)
                name, assignments = args[0], args[1:]
                if name in declared:
                    raise _fail(f"state '{name}' declared twice", line_no, source)
                values: dict[str, bool] = {}
                for item in assignments:
                    atom, sep, bit = item.partition("=")
                    if not sep or bit not in ("0", "1") or atom not in ap or atom in values:
                        raise _fail(f"bad assignment '{item}'", line_no, source)
                    values[atom] = bit == "1"
                if len(values) != len(ap):
                    missing = [x for x in ap if x not in values]
                    raise _fail(f"state '{name}' leaves {', '.join(missing)} unassigned", line_no, source)
                declared.add(name)
                states.append((name, {x for x, v in values.items() if v}))
            case "init":
                if len(args) != 1:
                    raise _fail("'init' takes one state", line_no, source)
                if initial is not None:
                    raise _fail("duplicate 'init' line", line_no, source)
                if args[0] not in declared:
                    raise _fail(f"undeclared state '{args[0]}'", line_no, source)
                initial = args[0]
            case "edge":
                if len(args) != 2:
                    raise _fail("'edge' takes two states", line_no, source)
                for name in args:
                    if name not in declared:
                        raise _fail(f"undeclared state '{name}'", line_no, source)
                edges.append((args[0], args[1]))
            case _:
                raise _fail(f"unknown keyword '{keyword}'", line_no, source)

    if not seen_header:
        raise KtsFormatError(f"{source}: empty system file", details={"source": source})
    if not states:
        raise KtsFormatError(f"{source}: no states declared", details={"source": source})
    if initial is None:
        raise KtsFormatError(f"{source}: missing 'init' line", details={"source": source})
    return Kripke.build(ap or (), states, initial, edges)


def print_kts(s: Kripke) -> str:
    """Canonical KTS text: header, atoms, states, initial state, edges."""
    lines = [HEADER, " ".join(("ap", *s.ap))]
    for name, val in zip(s.names, s.valuations, strict=True):
        lines.append(" ".join(("state", name, *(f"{x}={int(x in val)}" for x in s.ap))))
    lines.append(f"init {s.names[s.initial]}")
    for q, succ in enumerate(s.successors):
        lines.extend(f"edge {s.names[q]} {s.names[d]}" for d in succ)
    return "\n".join(lines) + "\n"


def read_kts(path: str | Path) -> Kripke:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise KtsFormatError(f"cannot read {p}: {exc.strerror}", details={"source": str(p)}) from exc
    return parse_kts(text, source=str(p))


def write_kts(s: Kripke, path: str | Path) -> None:
    Path(path).write_text(print_kts(s), encoding="utf-8")
