"""Ultimately periodic words and membership of ``u·v^ω`` in a TGBA."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from core.automaton.scc import graph_is_empty
from core.automaton.tgba import Tgba
from core.utils.exceptions import InvariantViolationError

Letter = frozenset[str]


@dataclass(frozen=True)
class LassoWord:
    """``prefix · cycle^ω``; each letter is the set of atoms that are true."""

    ap: tuple[str, ...]
    prefix: tuple[Letter, ...]
    cycle: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            raise InvariantViolationError("lasso cycle must be non-empty")
        known = set(self.ap)
        for letter in (*self.prefix, *self.cycle):
            if not letter <= known:
                raise InvariantViolationError(
                    "letter mentions atoms outside the alphabet",
                    details={"extra": sorted(letter - known)},
                )

    @classmethod
    def of(cls, ap: Iterable[str], prefix: Iterable[Iterable[str]], cycle: Iterable[Iterable[str]]) -> LassoWord:
        """Build from plain iterables of true atoms.

        Example:
            >>> LassoWord.of("a", [["a"]], [[]])   # a · (!a)^ω
        """
        return cls(tuple(ap), tuple(frozenset(x) for x in prefix), tuple(frozenset(x) for x in cycle))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return (*self.prefix, *self.cycle)

    def __len__(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def letter_at(self, i: int) -> Letter:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def project(self, ap: Iterable[str]) -> LassoWord:
        keep = tuple(ap)
        names = set(keep)
        return LassoWord(keep, tuple(x & names for x in self.prefix), tuple(x & names for x in self.cycle))

    def with_letters(self, letters: Iterable[Letter], loop_start: int) -> LassoWord:
        seq = tuple(letters)
        return LassoWord(self.ap, seq[:loop_start], seq[loop_start:])

    def __str__(self) -> str:
        def show(x: Letter) -> str:
            return "&".join(a if a in x else f"!{a}" for a in self.ap) or "1"

        return f"{'; '.join(show(x) for x in self.prefix)} ({'; '.join(show(x) for x in self.cycle)})^w"


def accepts_lasso(a: Tgba, w: LassoWord) -> bool:
    """True iff ``w ∈ L(a)``.

    Membership is decided on the product of ``a`` with the single-lasso
    automaton of ``w``. Atoms of ``a`` missing from ``w`` read as false;
    extra atoms of ``w`` are ignored.
    """
    mgr = a.manager
    letters = w.letters
    n = len(letters)
    loop = len(w.prefix)
    valuations = [{mgr.var_index(x): True for x in letter if x in a.ap} for letter in letters]
    succ = [i + 1 if i + 1 < n else loop for i in range(n)]

    index: dict[tuple[int, int], int] = {(a.initial, 0): 0}
    stack = [(a.initial, 0)]
    edges: list[tuple[int, int, int]] = []
    while stack:
        q, i = stack.pop()
        src = index[(q, i)]
        for t in a.out[q]:
            if not mgr.evaluate(t.label, valuations[i]):
                continue
            nxt = (t.dst, succ[i])
            if nxt not in index:
                index[nxt] = len(index)
                stack.append(nxt)
            edges.append((src, t.marks, index[nxt]))
    return not graph_is_empty(len(index), 0, edges, a.acceptance_mask)
