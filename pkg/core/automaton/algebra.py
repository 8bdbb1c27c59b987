"""
Synchronous product, sum and small structural rewrites of TGBAs.

When operands live in different BDD managers, the right operand's labels
are transferred into the left operand's manager (variables matched by
name), so results always share the left manager.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from core.automaton.tgba import Tgba, TgbaBuilder, Transition, check_mark_count, full_mask
from core.boolfn import Bdd
from core.utils.budget import check_deadline


class ProductResult(NamedTuple):
    automaton: Tgba
    states: list[tuple[int, int]]
    origins: list[tuple[int, int]]


def _union_ap(a1: Tgba, a2: Tgba) -> tuple[str, ...]:
    extra = tuple(x for x in a2.ap if x not in a1.ap)
    return a1.ap + extra


def _labels_in(a: Tgba, target: Tgba) -> list[Bdd]:
    mgr = target.manager
    return [mgr.transfer(t.label) for t in a.transitions]


def _and_formulas(a1: Tgba, a2: Tgba):
    if a1.formula is None or a2.formula is None:
        return None
    from core.ltl import And

    return And(a1.formula, a2.formula)


def product_with_origins(a1: Tgba, a2: Tgba) -> ProductResult:
    """Product of ``a1`` and ``a2``, reachable part only.

    Marks of ``a2`` are renumbered above those of ``a1``. Also returns, for
    every product state, its ``(q1, q2)`` pair and, for every product
    transition, the indices of the two transitions it synchronizes.

    The result lives in ``a1.manager``. When ``a2`` uses another manager its
    labels are transferred by variable name, declaring any of its atoms
    that ``a1.manager`` lacks; ``a2.manager`` is left untouched.

    Raises:
        MarkCapExceededError: If the combined mark count is too large.
    """
    num_marks = a1.num_marks + a2.num_marks
    check_mark_count(num_marks, "product")
    labels2 = _labels_in(a2, a1)
    index1 = {id(t): i for i, t in enumerate(a1.transitions)}
    out2: list[list[int]] = [[] for _ in range(a2.num_states)]
    for i, t in enumerate(a2.transitions):
        out2[t.src].append(i)

    builder = TgbaBuilder(a1.manager, _union_ap(a1, a2), num_marks)
    states: list[tuple[int, int]] = [(a1.initial, a2.initial)]
    index = {states[0]: builder.new_state()}
    origins: list[tuple[int, int]] = []
    queue = deque([states[0]])
    shift = a1.num_marks
    while queue:
        check_deadline("product")
        q1, q2 = queue.popleft()
        src = index[(q1, q2)]
        for t1 in a1.out[q1]:
            for j in out2[q2]:
                t2 = a2.transitions[j]
                label = t1.label & labels2[j]
                if label.is_false:
                    continue
                pair = (t1.dst, t2.dst)
                dst = index.get(pair)
                if dst is None:
                    dst = builder.new_state()
                    index[pair] = dst
                    states.append(pair)
                    queue.append(pair)
                builder.add(src, label, t1.marks | (t2.marks << shift), dst)
                origins.append((index1[id(t1)], j))
    return ProductResult(builder.build(0, _and_formulas(a1, a2)), states, origins)


def product(a1: Tgba, a2: Tgba) -> Tgba:
    """Automaton for ``L(a1) ∩ L(a2)``.

    Shares ``a1.manager``, which may gain ``a2``'s atoms; see
    :func:`product_with_origins`.
    """
    return product_with_origins(a1, a2).automaton


def tgba_sum(a1: Tgba, a2: Tgba) -> Tgba:
    """Automaton for ``L(a1) ∪ L(a2)``.

    Disjoint union plus a fresh initial state copying both initial states'
    outgoing transitions. The operand with fewer marks gets the missing ones
    added to all of its transitions.
    """
    num_marks = max(a1.num_marks, a2.num_marks)
    check_mark_count(num_marks, "sum")
    mgr = a1.manager
    builder = TgbaBuilder(mgr, _union_ap(a1, a2), num_marks)
    fresh = builder.new_state()
    builder.add_states(1 + a1.num_states + a2.num_states)
    full = full_mask(num_marks)

    def copy(a: Tgba, offset: int, labels: list[Bdd]) -> None:
        pad = full & ~full_mask(a.num_marks)
        for t, label in zip(a.transitions, labels, strict=True):
            builder.add(t.src + offset, label, t.marks | pad, t.dst + offset)
            if t.src == a.initial:
                builder.add(fresh, label, t.marks | pad, t.dst + offset)

    copy(a1, 1, [t.label for t in a1.transitions])
    copy(a2, 1 + a1.num_states, _labels_in(a2, a1))
    formula = None
    if a1.formula is not None and a2.formula is not None:
        from core.ltl import Or

        formula = Or(a1.formula, a2.formula)
    return builder.build(fresh, formula)


def merge_parallel(a: Tgba) -> Tgba:
    """Merge transitions sharing source, marks and destination by OR-ing labels."""
    merged: dict[tuple[int, int, int], Bdd] = {}
    for t in a.transitions:
        key = (t.src, t.marks, t.dst)
        prev = merged.get(key)
        merged[key] = t.label if prev is None else prev | t.label
    if len(merged) == len(a.transitions):
        return a
    transitions = tuple(Transition(s, label, m, d) for (s, m, d), label in merged.items())
    return Tgba(a.manager, a.ap, a.num_states, a.initial, a.num_marks, transitions, a.formula)


def relabel(a: Tgba, labels: list[Bdd], formula=None) -> Tgba:
    """Same skeleton with new labels; transitions whose label is ⊥ are dropped."""
    transitions = tuple(
        Transition(t.src, label, t.marks, t.dst)
        for t, label in zip(a.transitions, labels, strict=True)
        if not label.is_false
    )
    return Tgba(a.manager, a.ap, a.num_states, a.initial, a.num_marks, transitions, formula)


def with_all_marks(a: Tgba, num_marks: int = 1) -> Tgba:
    """Give a zero-mark automaton ``num_marks`` marks carried by every transition."""
    if a.num_marks:
        return a
    full = full_mask(num_marks)
    transitions = tuple(Transition(t.src, t.label, full, t.dst) for t in a.transitions)
    return Tgba(a.manager, a.ap, a.num_states, a.initial, num_marks, transitions, a.formula)
