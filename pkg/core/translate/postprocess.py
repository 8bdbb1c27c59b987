"""
Language-preserving reductions of TGBAs.

``simplify`` iterates, until the automaton stops shrinking:

- trimming to useful transitions and merging parallel transitions,
- mark minimization (marks outside accepting SCCs are cleared, marks
  implied by another mark are dropped),
- bisimulation quotient on (destination class, marks, label) signatures,
- pruning of transitions dominated by a parallel transition whose target
  direct-simulates theirs ("little brothers").
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import replace

from core.automaton import Tgba, Transition, merge_parallel, scc_info, trim
from core.automaton.tgba import renumber
from core.boolfn import Bdd
from core.utils.budget import check_deadline
from core.utils.logging import get_logger

logger = get_logger(__name__)

MAX_ROUNDS = 6
SIMULATION_STATE_LIMIT = 64


def _rebuild(a: Tgba, transitions: Sequence[Transition], num_marks: int | None = None) -> Tgba:
    marks = a.num_marks if num_marks is None else num_marks
    return Tgba(a.manager, a.ap, a.num_states, a.initial, marks, tuple(transitions), a.formula)


# ----------------------------------------------------------------------
# Marks
# ----------------------------------------------------------------------


def minimize_marks(a: Tgba) -> Tgba:
    """Clear marks that cannot matter and drop marks implied by others."""
    if a.num_marks == 0:
        return a
    info = scc_info(a)
    live: list[Transition] = []
    for t in a.transitions:
        c = info.component[t.src]
        if info.is_internal(t.src, t.dst) and info.accepting[c]:
            live.append(t)
        else:
            live.append(t._replace(marks=0))

    occ = [frozenset(i for i, t in enumerate(live) if t.marks >> m & 1) for m in range(a.num_marks)]
    kept = list(range(a.num_marks))
    for m2 in range(a.num_marks):
        for m1 in kept:
            if m1 == m2:
                continue
            if occ[m1] <= occ[m2] and (occ[m1] != occ[m2] or m1 < m2):
                kept.remove(m2)
                break

    if len(kept) == 1:
        internal = frozenset(
            i for i, t in enumerate(live) if info.is_internal(t.src, t.dst) and info.accepting[info.component[t.src]]
        )
        all_cyclic_accept = all(acc or not cyc for acc, cyc in zip(info.accepting, info.has_cycle, strict=True))
        if occ[kept[0]] == internal and all_cyclic_accept:
            kept = []

    if len(kept) == a.num_marks and all(t is u for t, u in zip(live, a.transitions, strict=True)):
        return a
    out = []
    for t in live:
        m = 0
        for new, old in enumerate(kept):
            if t.marks >> old & 1:
                m |= 1 << new
        out.append(t._replace(marks=m))
    return _rebuild(a, out, len(kept))


# ----------------------------------------------------------------------
# Bisimulation
# ----------------------------------------------------------------------


def _signatures(a: Tgba, cls: list[int]) -> list[frozenset[tuple[int, int, Bdd]]]:
    sigs = []
    for q in range(a.num_states):
        merged: dict[tuple[int, int], Bdd] = {}
        for t in a.out[q]:
            key = (cls[t.dst], t.marks)
            prev = merged.get(key)
            merged[key] = t.label if prev is None else prev | t.label
        sigs.append(frozenset((c, m, label) for (c, m), label in merged.items()))
    return sigs


def bisimulation_quotient(a: Tgba) -> Tgba:
    """Merge states with equal outgoing signatures, refined to a fixpoint."""
    cls = [0] * a.num_states
    count = 1
    while True:
        check_deadline("simplify")
        sigs = _signatures(a, cls)
        ids: dict[tuple[int, frozenset], int] = {}
        new = [ids.setdefault((cls[q], sigs[q]), len(ids)) for q in range(a.num_states)]
        if len(ids) == count:
            break
        cls, count = new, len(ids)
    if count == a.num_states:
        return a
    sigs = _signatures(a, cls)
    seen: set[int] = set()
    out = []
    for q in range(a.num_states):
        if cls[q] in seen:
            continue
        seen.add(cls[q])
        out.extend(Transition(cls[q], label, m, c) for c, m, label in sigs[q])
    return Tgba(a.manager, a.ap, count, cls[a.initial], a.num_marks, tuple(out), a.formula)


# ----------------------------------------------------------------------
# Direct simulation
# ----------------------------------------------------------------------


def direct_simulation(a: Tgba) -> list[list[bool]]:
    """``sim[q][r]``: ``r`` direct-simulates ``q``.

    Greatest relation such that every transition ``q -f,M-> q'`` is covered,
    letter by letter, by transitions ``r -g,N-> r'`` with ``N ⊇ M`` and
    ``sim[q'][r']``.
    """
    n = a.num_states
    mgr = a.manager
    sim = [[True] * n for _ in range(n)]
    changed = True
    while changed:
        check_deadline("simulation")
        changed = False
        for q in range(n):
            for r in range(n):
                if q == r or not sim[q][r]:
                    continue
                for t in a.out[q]:
                    cover = mgr.disjoin(
                        u.label for u in a.out[r] if u.marks & t.marks == t.marks and sim[t.dst][u.dst]
                    )
                    if not t.label.implies(cover):
                        sim[q][r] = False
                        changed = True
                        break
    return sim


def prune_little_brothers(a: Tgba) -> Tgba:
    """Remove letters of transitions dominated by a sibling transition.

    ``u`` dominates ``t`` (same source) when ``u`` carries at least ``t``'s
    marks and ``u``'s target simulates ``t``'s. Mutual domination is broken
    by transition order, so the relation is strict.
    """
    if a.num_states > SIMULATION_STATE_LIMIT:
        return a
    sim = direct_simulation(a)
    mgr = a.manager
    out: list[Transition] = []
    changed = False
    for q in range(a.num_states):
        edges = a.out[q]
        for i, t in enumerate(edges):

            def dominates(j: int, u: Transition, i: int = i, t: Transition = t) -> bool:
                if j == i or u.marks & t.marks != t.marks or not sim[t.dst][u.dst]:
                    return False
                mutual = t.marks & u.marks == u.marks and sim[u.dst][t.dst]
                return not mutual or j < i

            bigger = mgr.disjoin(u.label for j, u in enumerate(edges) if dominates(j, u))
            label = t.label & ~bigger
            if label != t.label:
                changed = True
            if not label.is_false:
                out.append(t._replace(label=label))
    if not changed:
        return a
    return _rebuild(a, out)


# ----------------------------------------------------------------------
# Driver
# ----------------------------------------------------------------------


def _size(a: Tgba) -> tuple[int, int, int]:
    return (a.num_states, a.num_transitions, a.num_marks)


def simplify(a: Tgba) -> Tgba:
    """Reduce ``a`` without changing its language; ``a.formula`` is kept."""
    current = trim(a)
    for _ in range(MAX_ROUNDS):
        before = _size(current)
        labels_before = [t.label for t in current.transitions]
        step = merge_parallel(current)
        step = minimize_marks(step)
        step = bisimulation_quotient(step)
        step = merge_parallel(step)
        step = prune_little_brothers(step)
        step = trim(step)
        if _size(step) == before and [t.label for t in step.transitions] == labels_before:
            current = step
            break
        current = step
    result, _ = renumber(current, current.transitions, formula=a.formula)
    if a.stutter_insensitive is not None:
        result = replace(result, stutter_insensitive=a.stutter_insensitive)
    logger.debug(
        "simplify.done",
        states_before=a.num_states,
        states_after=result.num_states,
        marks_after=result.num_marks,
    )
    return result
