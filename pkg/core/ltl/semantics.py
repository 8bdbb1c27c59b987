"""
Direct LTL semantics on ultimately periodic words.

Positions of ``u·v^ω`` are folded onto ``0..|u|+|v|-1``; the successor of
the last position is ``|u|``. Until and release are evaluated as least and
greatest fixpoints over those positions, which is exact for lasso words.
"""

from collections.abc import Collection, Sequence
from typing import Protocol

from core.ltl.formula import Formula, Op


class LassoLike(Protocol):
    @property
    def prefix(self) -> Sequence[Collection[str]]: ...

    @property
    def cycle(self) -> Sequence[Collection[str]]: ...


def _fixpoint(n: int, succ: list[int], step, start: bool) -> list[bool]:
    values = [start] * n
    changed = True
    while changed:
        changed = False
        for i in range(n - 1, -1, -1):
            v = step(i, values[succ[i]])
            if v != values[i]:
                values[i] = v
                changed = True
    return values


def evaluate_positions(f: Formula, letters: Sequence[Collection[str]], loop_start: int) -> list[bool]:
    """Truth value of ``f`` at every folded position."""
    n = len(letters)
    succ = [i + 1 if i + 1 < n else loop_start for i in range(n)]
    cache: dict[Formula, list[bool]] = {}

    def ev(g: Formula) -> list[bool]:
        hit = cache.get(g)
        if hit is not None:
            return hit
        match g.op:
            case Op.TRUE:
                r = [True] * n
            case Op.FALSE:
                r = [False] * n
            case Op.ATOM:
                r = [g.name in letter for letter in letters]
            case Op.NOT:
                r = [not v for v in ev(g.args[0])]
            case Op.AND:
                parts = [ev(a) for a in g.args]
                r = [all(p[i] for p in parts) for i in range(n)]
            case Op.OR:
                parts = [ev(a) for a in g.args]
                r = [any(p[i] for p in parts) for i in range(n)]
            case Op.IMPLIES:
                a, b = ev(g.args[0]), ev(g.args[1])
                r = [(not a[i]) or b[i] for i in range(n)]
            case Op.EQUIV:
                a, b = ev(g.args[0]), ev(g.args[1])
                r = [a[i] == b[i] for i in range(n)]
            case Op.NEXT:
                a = ev(g.args[0])
                r = [a[succ[i]] for i in range(n)]
            case Op.EVENTUALLY:
                b = ev(g.args[0])
                r = _fixpoint(n, succ, lambda i, nxt: b[i] or nxt, False)
            case Op.ALWAYS:
                b = ev(g.args[0])
                r = _fixpoint(n, succ, lambda i, nxt: b[i] and nxt, True)
            case Op.UNTIL:
                a, b = ev(g.args[0]), ev(g.args[1])
                r = _fixpoint(n, succ, lambda i, nxt: b[i] or (a[i] and nxt), False)
            case Op.RELEASE:
                a, b = ev(g.args[0]), ev(g.args[1])
                r = _fixpoint(n, succ, lambda i, nxt: b[i] and (a[i] or nxt), True)
            case _:
                raise ValueError(f"unsupported operator {g.op!r}")
        cache[g] = r
        return r

    return ev(f)


def holds_on_lasso(f: Formula, word: LassoLike) -> bool:
    """True iff ``prefix · cycle^ω`` satisfies ``f``.

    Example:
        >>> w = LassoWord(ap=("a",), prefix=(frozenset({"a"}),), cycle=(frozenset(),))
        >>> holds_on_lasso(parse("X F a"), w)
        False
    """
    letters = [*word.prefix, *word.cycle]
    return evaluate_positions(f, letters, len(word.prefix))[0]
