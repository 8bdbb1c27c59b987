"""
LTL abstract syntax.

A :class:`Formula` is an immutable tree node: an operator, its operands and,
for atoms, a name. Conjunctions and disjunctions are n-ary and flattened by
their builders; everything else keeps the shape it was built with.

Example:
    >>> a, b = atom("a"), atom("b")
    >>> str(F(a & b) | G(~a))
    'F(a & b) | G !a'
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import StrEnum


class Op(StrEnum):
    TRUE = "1"
    FALSE = "0"
    ATOM = "ap"
    NOT = "!"
    AND = "&"
    OR = "|"
    IMPLIES = "->"
    EQUIV = "<->"
    NEXT = "X"
    EVENTUALLY = "F"
    ALWAYS = "G"
    UNTIL = "U"
    RELEASE = "R"


UNARY_OPS = frozenset({Op.NOT, Op.NEXT, Op.EVENTUALLY, Op.ALWAYS})
BINARY_OPS = frozenset({Op.AND, Op.OR, Op.IMPLIES, Op.EQUIV, Op.UNTIL, Op.RELEASE})
TEMPORAL_OPS = frozenset({Op.NEXT, Op.EVENTUALLY, Op.ALWAYS, Op.UNTIL, Op.RELEASE})


@dataclass(frozen=True)
class Formula:
    op: Op
    args: tuple[Formula, ...] = ()
    name: str | None = None
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.op, self.args, self.name)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return to_text(self)

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    @property
    def is_atom(self) -> bool:
        return self.op is Op.ATOM

    @property
    def is_constant(self) -> bool:
        return self.op in (Op.TRUE, Op.FALSE)

    @property
    def is_temporal(self) -> bool:
        return self.op in TEMPORAL_OPS

    @property
    def is_literal(self) -> bool:
        return self.op is Op.ATOM or (self.op is Op.NOT and self.args[0].op is Op.ATOM)


TRUE = Formula(Op.TRUE)
FALSE = Formula(Op.FALSE)


def atom(name: str) -> Formula:
    return Formula(Op.ATOM, (), name)


def constant(value: bool) -> Formula:
    return TRUE if value else FALSE


def Not(f: Formula) -> Formula:
    return Formula(Op.NOT, (f,))


def _flatten(op: Op, args: tuple[Formula, ...]) -> tuple[Formula, ...]:
    out: list[Formula] = []
    for a in args:
        if a.op is op:
            out.extend(a.args)
        else:
            out.append(a)
    return tuple(out)


def And(*args: Formula) -> Formula:
    flat = _flatten(Op.AND, args)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return Formula(Op.AND, flat)


def Or(*args: Formula) -> Formula:
    flat = _flatten(Op.OR, args)
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return Formula(Op.OR, flat)


def Implies(a: Formula, b: Formula) -> Formula:
    return Formula(Op.IMPLIES, (a, b))


def Equiv(a: Formula, b: Formula) -> Formula:
    return Formula(Op.EQUIV, (a, b))


def X(f: Formula) -> Formula:
    return Formula(Op.NEXT, (f,))


def F(f: Formula) -> Formula:
    return Formula(Op.EVENTUALLY, (f,))


def G(f: Formula) -> Formula:
    return Formula(Op.ALWAYS, (f,))


def U(a: Formula, b: Formula) -> Formula:
    return Formula(Op.UNTIL, (a, b))


def R(a: Formula, b: Formula) -> Formula:
    return Formula(Op.RELEASE, (a, b))


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, duplicates included."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(reversed(g.args))


def atoms(f: Formula) -> frozenset[str]:
    """The exact set of atom names occurring in ``f``."""
    return frozenset(g.name for g in iter_subformulas(f) if g.op is Op.ATOM and g.name)


def atoms_in_order(f: Formula) -> tuple[str, ...]:
    """Atom names in order of first occurrence (left to right)."""
    seen: dict[str, None] = {}
    for g in iter_subformulas(f):
        if g.op is Op.ATOM and g.name:
            seen.setdefault(g.name, None)
    return tuple(seen)


def size(f: Formula) -> int:
    return sum(1 for _ in iter_subformulas(f))


# ==============================================================================
# Printing
# ==============================================================================


def _operand(f: Formula) -> str:
    text = to_text(f)
    return f"({text})" if f.op in BINARY_OPS else text


def to_text(f: Formula) -> str:
    """Render in the parser's grammar; binary operands are always parenthesized."""
    match f.op:
        case Op.TRUE:
            return "1"
        case Op.FALSE:
            return "0"
        case Op.ATOM:
            return f.name or ""
        case Op.NOT:
            return f"!{_operand(f.args[0])}"
        case Op.NEXT | Op.EVENTUALLY | Op.ALWAYS:
            inner = _operand(f.args[0])
            sep = "" if inner.startswith("(") else " "
            return f"{f.op.value}{sep}{inner}"
        case Op.AND | Op.OR:
            return f" {f.op.value} ".join(_operand(a) for a in f.args)
        case Op.IMPLIES | Op.EQUIV | Op.UNTIL | Op.RELEASE:
            return f"{_operand(f.args[0])} {f.op.value} {_operand(f.args[1])}"
    raise ValueError(f"unsupported operator {f.op!r}")
