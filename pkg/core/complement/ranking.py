"""
Generic complementation by tight level rankings.

Pipeline: trim, degeneralize to one mark, move acceptance onto states,
then run the rank-based construction over explicit letters. Letters are the
minterms over the atoms the labels actually mention.

Runs first follow the plain subset construction and may, on any letter,
jump to a tight level ranking of the successor set. A level ranking maps
states to ranks with accepting states on even ranks; it is tight when its
maximum rank is odd and every odd rank below it is used (the empty ranking
is tight too). Ranked macro-states carry the breakpoint set of even-ranked
states still owing a visit to an odd rank, and transitions leaving a ranked
macro-state whose breakpoint set is empty are accepting.

The budget ``cap`` bounds macro-states, and separately the work spent on
enumerated ranking candidates plus emitted transitions; exceeding either
raises :class:`ComplementCapExceededError` so callers can degrade.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from core.automaton import Tgba, TgbaBuilder, merge_parallel, trim
from core.complement.degeneralize import degeneralize
from core.config import get_settings
from core.ltl import Not
from core.translate import simplify
from core.utils.budget import check_deadline
from core.utils.exceptions import ExceptionFactory
from core.utils.logging import get_logger

logger = get_logger(__name__)

MAX_LETTER_ATOMS = 10

Ranking = tuple[tuple[int, int], ...]  # sorted (state, rank)
SubsetState = tuple[str, frozenset[int]]
RankedState = tuple[str, Ranking, frozenset[int]]
MacroState = SubsetState | RankedState


@dataclass
class _StateBased:
    """Explicit state-based Büchi automaton over minterm letters."""

    accepting: list[bool]
    succ: list[list[frozenset[int]]]  # state -> letter -> successors
    initial: int = 0

    @property
    def size(self) -> int:
        return len(self.accepting)

    def post(self, states, letter: int) -> frozenset[int]:
        return frozenset(s for q in states for s in self.succ[q][letter])


@dataclass
class _Work:
    """Work counter shared by candidate enumeration and transition emission."""

    cap: int
    spent: int = 0

    def charge(self, amount: int) -> None:
        self.spent += amount
        if self.spent > self.cap:
            raise ExceptionFactory.complement_cap_exceeded(self.spent, self.cap)


def _state_based(a: Tgba, letters: list[dict[int, bool]], cap: int) -> _StateBased:
    """States ``(q, seen)``: ``seen`` iff the entering transition carried mark 0."""
    mgr = a.manager
    start = (a.initial, False)
    index = {start: 0}
    accepting = [False]
    succ: list[list[frozenset[int]]] = []
    queue = deque([start])
    while queue:
        check_deadline("complement")
        q, _ = queue.popleft()
        row = []
        for letter in letters:
            targets = set()
            for t in a.out[q]:
                if not mgr.evaluate(t.label, letter):
                    continue
                key = (t.dst, bool(t.marks & 1))
                s = index.get(key)
                if s is None:
                    if len(index) >= cap:
                        raise ExceptionFactory.complement_cap_exceeded(len(index), cap)
                    s = len(index)
                    index[key] = s
                    accepting.append(key[1])
                    queue.append(key)
                targets.add(s)
            row.append(frozenset(targets))
        succ.append(row)
    return _StateBased(accepting, succ)


def _tight_rankings(sba: _StateBased, bound: dict[int, int], work: _Work) -> list[Ranking]:
    """Every tight ranking of ``bound``'s states with ranks at most ``bound``.

    Odd ranks can only go to non-accepting states, so the top rank is at most
    twice their number minus one. Assignments that can no longer cover the
    missing odd ranks are pruned; each search node is charged to ``work``.
    """
    order = sorted(bound)
    if not order:
        return [()]
    free_after = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        free_after[i] = free_after[i + 1] + (not sba.accepting[order[i]])
    candidates = [bound[q] for q in order if not sba.accepting[q]]
    if not candidates:
        return []
    top_max = min(max(candidates), 2 * free_after[0] - 1)

    out: list[Ranking] = []
    ranks = [0] * len(order)
    used: set[int] = set()

    def assign(i: int, top: int) -> None:
        work.charge(1)
        missing = (top + 1) // 2 - len(used)
        if missing > free_after[i]:
            return
        if i == len(order):
            out.append(tuple(zip(order, ranks, strict=True)))
            return
        q = order[i]
        for r in range(min(bound[q], top) + 1):
            if r % 2 and sba.accepting[q]:
                continue
            ranks[i] = r
            fresh = r % 2 == 1 and r not in used
            if fresh:
                used.add(r)
            assign(i + 1, top)
            if fresh:
                used.discard(r)

    for top in range(1, top_max + 1, 2):
        assign(0, top)
    return out


def _successors(sba: _StateBased, macro: MacroState, letter: int, work: _Work) -> list[MacroState]:
    if macro[0] == "subset":
        _, states = macro
        targets = sba.post(states, letter)
        top = 2 * len(targets) - 1
        jumps: list[MacroState] = [
            ("ranked", r, frozenset()) for r in _tight_rankings(sba, dict.fromkeys(targets, top), work)
        ]
        return ([("subset", targets)] if targets else []) + jumps

    _, ranking, breakpoint = macro
    bound: dict[int, int] = {}
    for q, r in ranking:
        for q2 in sba.succ[q][letter]:
            bound[q2] = min(bound.get(q2, r), r)
    owing = sba.post(breakpoint, letter) if breakpoint else frozenset(bound)
    out: list[MacroState] = []
    for new_ranking in _tight_rankings(sba, bound, work):
        even = frozenset(q for q, r in new_ranking if r % 2 == 0)
        out.append(("ranked", new_ranking, owing & even))
    return out


def complement_generic(a: Tgba, cap: int | None = None) -> Tgba:
    """Automaton for the complement of ``L(a)``, built without a formula.

    Raises:
        ComplementCapExceededError: If the alphabet has more than
            ``MAX_LETTER_ATOMS`` atoms, or the macro-states or the work
            spent on rankings and transitions exceed ``cap``.
    """
    budget = cap if cap is not None else get_settings().complement_state_cap
    formula = None
    if a.formula is not None:
        formula = Not(a.formula)
    mgr = a.manager
    if len(a.ap) > MAX_LETTER_ATOMS:
        raise ExceptionFactory.complement_cap_exceeded(2 ** len(a.ap), budget)

    d = trim(degeneralize(trim(a)))
    if not d.transitions:
        return Tgba.universal(mgr, a.ap, formula)

    variables = sorted(set().union(*(mgr.support(t.label) for t in d.transitions)))
    letters = [
        dict(zip(variables, bits, strict=True))
        for bits in itertools.product((False, True), repeat=len(variables))
    ]
    cubes = [mgr.cube(letter) for letter in letters]
    sba = _state_based(d, letters, budget)
    work = _Work(budget)

    start: MacroState = ("subset", frozenset({sba.initial}))
    builder = TgbaBuilder(mgr, a.ap, 1)
    index = {start: builder.new_state()}
    queue = deque([start])
    while queue:
        check_deadline("complement")
        macro = queue.popleft()
        src = index[macro]
        marks = 1 if macro[0] == "ranked" and not macro[2] else 0
        for i, cube in enumerate(cubes):
            for nxt in _successors(sba, macro, i, work):
                dst = index.get(nxt)
                if dst is None:
                    if len(index) >= budget:
                        raise ExceptionFactory.complement_cap_exceeded(len(index), budget)
                    dst = builder.new_state()
                    index[nxt] = dst
                    queue.append(nxt)
                work.charge(1)
                builder.add(src, cube, marks, dst)
    raw = builder.build(0, formula)
    logger.debug("complement.generic", sba_states=sba.size, macro_states=raw.num_states, work=work.spent)
    return simplify(merge_parallel(raw))
