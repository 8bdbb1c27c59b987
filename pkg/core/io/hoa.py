"""
Printer and parser for a subset of the Hanoi Omega-Automata format.

Supported: ``HOA: v1`` with ``States:``, a single ``Start:``, ``AP:``,
``Acceptance:`` as ``t`` or a conjunction of ``Inf`` sets, explicit
transition labels over AP indices and acceptance sets on transitions or on
states (moved onto their outgoing transitions). Other headers are ignored.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import NamedTuple

from core.automaton import Tgba, TgbaBuilder, check_mark_count, mask_of, marks_of
from core.boolfn import Bdd, BddManager, isop
from core.utils.exceptions import HoaFormatError, UnsupportedAcceptanceError

VERSION = "v1"

# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------


def _label_text(label: Bdd, index: dict[str, int]) -> str:
    if label.is_true:
        return "t"
    names = label.manager.var_names
    products = []
    for product in isop(label, label):
        lits: list[tuple[int, str]] = []
        for v, positive in product:
            ap = index.get(names[v])
            if ap is None:
                raise HoaFormatError("label reads an atom outside the automaton alphabet", details={"atom": names[v]})
            lits.append((ap, str(ap) if positive else f"!{ap}"))
        products.append("&".join(text for _, text in sorted(lits)))
    return " | ".join(sorted(products))


def _acceptance(num_marks: int) -> tuple[str, str]:
    if num_marks == 0:
        return "all", "0 t"
    cond = "&".join(f"Inf({i})" for i in range(num_marks))
    name = "Buchi" if num_marks == 1 else f"generalized-Buchi {num_marks}"
    return name, f"{num_marks} {cond}"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hoa_print(a: Tgba, name: str | None = None) -> str:
    """Deterministic HOA text: states in id order, transitions by ``(dst, label)``."""
    index = {x: i for i, x in enumerate(a.ap)}
    acc_name, acceptance = _acceptance(a.num_marks)
    title = name if name is not None else (str(a.formula) if a.formula is not None else None)
    lines = [f"HOA: {VERSION}"]
    if title is not None:
        lines.append(f"name: {_quote(title)}")
    lines += [
        f"States: {a.num_states}",
        f"Start: {a.initial}",
        " ".join(("AP:", str(len(a.ap)), *(_quote(x) for x in a.ap))),
        f"acc-name: {acc_name}",
        f"Acceptance: {acceptance}",
        "properties: trans-labels explicit-labels trans-acc",
        "--BODY--",
    ]
    for q in range(a.num_states):
        lines.append(f"State: {q}")
        rows = []
        for t in a.out[q]:
            acc = f" {{{' '.join(map(str, marks_of(t.marks)))}}}" if t.marks else ""
            rows.append((t.dst, _label_text(t.label, index), acc))
        lines.extend(f"[{label}] {dst}{acc}" for dst, label, acc in sorted(rows))
    lines.append("--END--")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------

_HEADER = re.compile(r"^([A-Za-z][A-Za-z0-9_-]*):\s*(.*)$")
_STRING = re.compile(r'"((?:[^"\\]|\\.)*)"')
_LABEL_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<op>[!&|()])|(?P<const>[tf])\b)")
_INF = re.compile(r"Inf\((\d+)\)")


class _Edge(NamedTuple):
    src: int
    label: Bdd
    marks: tuple[int, ...]
    dst: int


def _fail(reason: str, line_no: int | None = None) -> HoaFormatError:
    where = f"line {line_no}: " if line_no is not None else ""
    return HoaFormatError(f"{where}{reason}", details={"line": line_no} if line_no is not None else {})


def _int(text: str, what: str, line_no: int) -> int:
    if not text.isdigit():
        raise _fail(f"{what} must be a non-negative integer, got {text!r}", line_no)
    return int(text)


def _parse_acceptance(text: str, line_no: int) -> tuple[int, list[int]]:
    """Return the declared set count and the sets required infinitely often."""
    count, _, cond = text.strip().partition(" ")
    num = _int(count, "acceptance set count", line_no)
    cond = cond.strip()
    if cond == "t":
        return num, []
    if "Fin" in cond or "|" in cond or "!" in cond or cond == "f":
        raise UnsupportedAcceptanceError(
            f"line {line_no}: only generalized Büchi acceptance is supported, got {cond!r}",
            details={"line": line_no, "acceptance": cond},
        )
    rest = _INF.sub("", cond)
    if not _INF.search(cond) or rest.strip("&() \t"):
        raise UnsupportedAcceptanceError(
            f"line {line_no}: unsupported acceptance condition {cond!r}", details={"line": line_no, "acceptance": cond}
        )
    if rest.count("(") != rest.count(")"):
        raise _fail(f"unbalanced parentheses in acceptance {cond!r}", line_no)
    sets: list[int] = []
    for m in _INF.finditer(cond):
        s = int(m.group(1))
        if s >= num:
            raise _fail(f"acceptance set {s} out of range", line_no)
        if s not in sets:
            sets.append(s)
    return num, sorted(sets)


class _LabelParser:
    """``|`` binds loosest, then ``&``, then ``!``."""

    def __init__(self, text: str, atoms: list[Bdd], mgr: BddManager, line_no: int) -> None:
        self.text = text
        self.atoms = atoms
        self.mgr = mgr
        self.line_no = line_no
        self.tokens = self._tokenize()
        self.pos = 0

    def _tokenize(self) -> list[str]:
        out, pos = [], 0
        while pos < len(self.text):
            if not self.text[pos:].strip():
                break
            m = _LABEL_TOKEN.match(self.text, pos)
            if not m:
                raise _fail(f"bad label {self.text!r}", self.line_no)
            out.append(m.group(m.lastgroup or "op"))
            pos = m.end()
        return out

    def _peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> str:
        tok = self._peek()
        if tok is None:
            raise _fail(f"truncated label {self.text!r}", self.line_no)
        self.pos += 1
        return tok

    def parse(self) -> Bdd:
        f = self._disj()
        if self._peek() is not None:
            raise _fail(f"trailing tokens in label {self.text!r}", self.line_no)
        return f

    def _disj(self) -> Bdd:
        f = self._conj()
        while self._peek() == "|":
            self._take()
            f = f | self._conj()
        return f

    def _conj(self) -> Bdd:
        f = self._unary()
        while self._peek() == "&":
            self._take()
            f = f & self._unary()
        return f

    def _unary(self) -> Bdd:
        tok = self._take()
        if tok == "!":
            return ~self._unary()
        if tok == "(":
            f = self._disj()
            if self._take() != ")":
                raise _fail(f"unbalanced parentheses in {self.text!r}", self.line_no)
            return f
        if tok == "t":
            return self.mgr.true
        if tok == "f":
            return self.mgr.false
        if tok.isdigit():
            i = int(tok)
            if i >= len(self.atoms):
                raise _fail(f"AP index {i} out of range", self.line_no)
            return self.atoms[i]
        raise _fail(f"unexpected {tok!r} in label", self.line_no)


def _acc_sets(text: str, line_no: int) -> tuple[int, ...]:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise _fail(f"bad acceptance sets {text!r}", line_no)
    return tuple(_int(x, "acceptance set", line_no) for x in body[1:-1].split())


def hoa_parse(text: str, manager: BddManager | None = None) -> Tgba:
    """Parse one automaton.

    Raises:
        UnsupportedAcceptanceError: For acceptance other than ``t`` or an
            ``Inf`` conjunction.
        HoaFormatError: For malformed input, several initial states,
            implicit labels or alternation.
    """
    mgr = manager or BddManager()
    lines = text.splitlines()
    num_states: int | None = None
    start: int | None = None
    ap: list[str] | None = None
    acceptance: tuple[int, list[int]] | None = None

    i = 0
    while i < len(lines) and not lines[i].strip():
        i += 1
    if i >= len(lines) or lines[i].strip() != f"HOA: {VERSION}":
        raise _fail("expected 'HOA: v1'", i + 1)
    i += 1
    while i < len(lines) and lines[i].strip() != "--BODY--":
        line_no, line = i + 1, lines[i].strip()
        i += 1
        if not line:
            continue
        m = _HEADER.match(line)
        if not m:
            raise _fail(f"malformed header {line!r}", line_no)
        key, value = m.group(1), m.group(2).strip()
        match key:
            case "States":
                num_states = _int(value, "States", line_no)
            case "Start":
                if start is not None:
                    raise _fail("several initial states are not supported", line_no)
                if "&" in value:
                    raise _fail("alternating initial states are not supported", line_no)
                start = _int(value, "Start", line_no)
            case "AP":
                count, _, rest = value.partition(" ")
                names = _STRING.findall(rest)
                if _int(count, "AP count", line_no) != len(names):
                    raise _fail("AP count does not match the names", line_no)
                ap = [re.sub(r"\\(.)", r"\1", n) for n in names]
            case "Acceptance":
                acceptance = _parse_acceptance(value, line_no)
            case "Alias":
                raise _fail("aliases are not supported", line_no)
            case _:
                pass
    if i >= len(lines):
        raise _fail("missing --BODY--")
    if acceptance is None:
        raise _fail("missing Acceptance header")
    ap = ap or []
    num_sets, inf_sets = acceptance
    check_mark_count(len(inf_sets), "hoa_parse")
    renumber = {s: k for k, s in enumerate(inf_sets)}
    mgr.declare_all(ap)
    atoms = [mgr.var(x) for x in ap]

    edges: list[_Edge] = []
    declared: set[int] = set()
    state: int | None = None
    state_acc: tuple[int, ...] = ()
    i += 1
    ended = False
    while i < len(lines):
        line_no, line = i + 1, lines[i].strip()
        i += 1
        if not line:
            continue
        if line == "--END--":
            ended = True
            break
        if line.startswith("State:"):
            rest = line[len("State:") :].strip()
            if rest.startswith("["):
                raise _fail("state labels are not supported", line_no)
            rest = _STRING.sub("", rest).strip()
            head, brace, tail = rest.partition("{")
            state = _int(head.strip(), "state", line_no)
            if state in declared:
                raise _fail(f"state {state} declared twice", line_no)
            declared.add(state)
            state_acc = _acc_sets(brace + tail, line_no) if brace else ()
            continue
        if state is None:
            raise _fail("transition before any State:", line_no)
        if not line.startswith("["):
            raise _fail("implicit labels are not supported", line_no)
        close = line.find("]")
        if close < 0:
            raise _fail("unterminated label", line_no)
        label = _LabelParser(line[1:close], atoms, mgr, line_no).parse()
        dst_text, brace, tail = line[close + 1 :].partition("{")
        dst_text = dst_text.strip()
        if "&" in dst_text:
            raise _fail("alternation is not supported", line_no)
        dst = _int(dst_text, "destination", line_no)
        sets = (_acc_sets(brace + tail, line_no) if brace else ()) + state_acc
        for s in sets:
            if s >= num_sets:
                raise _fail(f"acceptance set {s} out of range", line_no)
        edges.append(_Edge(state, label, tuple(renumber[s] for s in sets if s in renumber), dst))
    if not ended:
        raise _fail("missing --END--")

    if num_states is not None:
        n = num_states
    else:
        n = max([1, *(q + 1 for q in declared), *(e.dst + 1 for e in edges)])
    if max(declared, default=-1) >= n:
        raise _fail(f"state {max(declared)} out of range (States: {n})")
    for e in edges:
        if e.dst >= n or e.src >= n:
            raise _fail(f"state {max(e.src, e.dst)} out of range (States: {n})")
    if start is None:
        raise _fail("missing Start header")
    if start >= n:
        raise _fail(f"initial state {start} out of range")

    builder = TgbaBuilder(mgr, ap, len(inf_sets))
    builder.add_states(max(n, 1))
    for e in edges:
        builder.add(e.src, e.label, mask_of(e.marks), e.dst)
    return builder.build(start)


def read_hoa(path: str | Path, manager: BddManager | None = None) -> Tgba:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise HoaFormatError(f"cannot read {p}: {exc.strerror}", details={"source": str(p)}) from exc
    return hoa_parse(text, manager)


def write_hoa(a: Tgba, path: str | Path) -> None:
    Path(path).write_text(hoa_print(a), encoding="utf-8")
