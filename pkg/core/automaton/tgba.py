"""
Transition-based generalized Büchi automata.

A :class:`Tgba` is an immutable value: states ``0..n-1``, one initial state,
``num_marks`` acceptance marks stored as a bit set on each transition, and
transition labels as BDDs of a shared manager. A run is accepting iff every
mark occurs infinitely often; with zero marks every infinite run is
accepting.

``formula`` optionally records an LTL formula whose language the automaton
recognizes; complementation uses it when present. ``stutter_insensitive``
is a property bit set by constructions that guarantee it (None: not known).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, replace
from functools import cached_property
from typing import TYPE_CHECKING, NamedTuple

from core.boolfn import Bdd, BddManager
from core.config import get_settings
from core.utils.exceptions import ExceptionFactory, InvariantViolationError

if TYPE_CHECKING:
    from core.ltl import Formula

MAX_MARKS = 32


class Transition(NamedTuple):
    src: int
    label: Bdd
    marks: int
    dst: int


def mask_of(marks: Iterable[int]) -> int:
    m = 0
    for i in marks:
        m |= 1 << i
    return m


def marks_of(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def full_mask(num_marks: int) -> int:
    return (1 << num_marks) - 1


def check_mark_count(num_marks: int, operation: str) -> None:
    cap = min(MAX_MARKS, get_settings().max_marks)
    if num_marks > cap:
        raise ExceptionFactory.mark_cap_exceeded(operation, num_marks, cap)


@dataclass(frozen=True, eq=False)
class Tgba:
    manager: BddManager
    ap: tuple[str, ...]
    num_states: int
    initial: int
    num_marks: int
    transitions: tuple[Transition, ...]
    formula: Formula | None = None
    stutter_insensitive: bool | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.initial < self.num_states:
            raise InvariantViolationError(
                "initial state out of range",
                details={"initial": self.initial, "states": self.num_states},
            )
        if self.num_marks > MAX_MARKS:
            raise ExceptionFactory.mark_cap_exceeded("tgba", self.num_marks, MAX_MARKS)
        mask = full_mask(self.num_marks)
        for t in self.transitions:
            if not (0 <= t.src < self.num_states and 0 <= t.dst < self.num_states):
                raise InvariantViolationError("transition endpoint out of range", details={"src": t.src, "dst": t.dst})
            if t.marks & ~mask:
                raise InvariantViolationError("transition mark outside the acceptance set", details={"marks": t.marks})

    @property
    def acceptance_mask(self) -> int:
        return full_mask(self.num_marks)

    @cached_property
    def out(self) -> tuple[tuple[Transition, ...], ...]:
        """Outgoing transitions per state."""
        buckets: list[list[Transition]] = [[] for _ in range(self.num_states)]
        for t in self.transitions:
            buckets[t.src].append(t)
        return tuple(tuple(b) for b in buckets)

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)

    def with_formula(self, formula: Formula | None) -> Tgba:
        return replace(self, formula=formula)

    def ap_vars(self) -> list[int]:
        return [self.manager.var_index(a) for a in self.ap]

    def __iter__(self) -> Iterator[Transition]:
        return iter(self.transitions)

    def __repr__(self) -> str:
        return (
            f"Tgba(states={self.num_states}, transitions={len(self.transitions)}, "
            f"marks={self.num_marks}, ap={list(self.ap)})"
        )

    # ------------------------------------------------------------------
    # Canonical automata
    # ------------------------------------------------------------------

    @classmethod
    def universal(cls, manager: BddManager, ap: Iterable[str] = (), formula: Formula | None = None) -> Tgba:
        """One state with a ⊤ self-loop and no marks."""
        names = tuple(ap)
        manager.declare_all(names)
        return cls(manager, names, 1, 0, 0, (Transition(0, manager.true, 0, 0),), formula)

    @classmethod
    def empty(cls, manager: BddManager, ap: Iterable[str] = (), formula: Formula | None = None) -> Tgba:
        """One state, no transitions."""
        names = tuple(ap)
        manager.declare_all(names)
        return cls(manager, names, 1, 0, 0, (), formula)


class TgbaBuilder:
    """Incremental construction; ⊥-labeled transitions are dropped.

    Example:
        >>> b = TgbaBuilder(mgr, ("a",), num_marks=1)
        >>> q0, q1 = b.new_state(), b.new_state()
        >>> b.add(q0, ~mgr.var("a"), 0, q0)
        >>> b.add(q0, mgr.var("a"), 1, q1)
        >>> b.add(q1, mgr.true, 1, q1)
        >>> aut = b.build(initial=q0)
    """

    def __init__(self, manager: BddManager, ap: Iterable[str], num_marks: int = 0) -> None:
        self.manager = manager
        self.ap = tuple(ap)
        manager.declare_all(self.ap)
        self.num_marks = num_marks
        self.num_states = 0
        self.transitions: list[Transition] = []

    def new_state(self) -> int:
        self.num_states += 1
        return self.num_states - 1

    def add_states(self, n: int) -> None:
        self.num_states = max(self.num_states, n)

    def add(self, src: int, label: Bdd, marks: int, dst: int) -> None:
        if label.is_false:
            return
        self.transitions.append(Transition(src, label, marks, dst))

    def build(self, initial: int = 0, formula: Formula | None = None) -> Tgba:
        if self.num_states == 0:
            self.new_state()
        return Tgba(
            self.manager,
            self.ap,
            self.num_states,
            initial,
            self.num_marks,
            tuple(self.transitions),
            formula,
        )


def renumber(
    a: Tgba,
    transitions: Iterable[Transition],
    num_marks: int | None = None,
    formula: Formula | None = None,
) -> tuple[Tgba, dict[int, int]]:
    """Rebuild ``a`` with only ``transitions``, states renumbered in BFS order.

    States unreachable through ``transitions`` disappear (the initial state
    always stays, as state 0).
    """
    by_src: dict[int, list[Transition]] = {}
    for t in transitions:
        by_src.setdefault(t.src, []).append(t)
    order = {a.initial: 0}
    queue = deque([a.initial])
    out: list[Transition] = []
    while queue:
        q = queue.popleft()
        for t in by_src.get(q, ()):
            if t.dst not in order:
                order[t.dst] = len(order)
                queue.append(t.dst)
            out.append(Transition(order[q], t.label, t.marks, order[t.dst]))
    marks = a.num_marks if num_marks is None else num_marks
    return Tgba(a.manager, a.ap, len(order), 0, marks, tuple(out), formula), order
