"""
Stutter-insensitive closure, stutter-sensitive part, and the
stutter-insensitivity test.

The closure combines two syntactic saturations:

- ``closure_shortcuts`` lets one letter stand for two equal consecutive
  letters (shortcut ``q -f1∧f2-> q''`` for every path ``q -f1-> q' -f2-> q''``);
- ``closure_stutter_states`` lets every letter be repeated, through a stutter
  state per (target, letter) with a mark-free self-loop.
"""

from __future__ import annotations

import itertools
from dataclasses import replace

from core.automaton import Tgba, TgbaBuilder, Transition, is_empty, product, trim, with_all_marks
from core.boolfn import Bdd
from core.complement import MAX_LETTER_ATOMS, complement_of
from core.config import get_settings
from core.translate import simplify
from core.utils.budget import check_deadline
from core.utils.exceptions import ExceptionFactory
from core.utils.logging import get_logger

logger = get_logger(__name__)


def closure_shortcuts(a: Tgba) -> Tgba:
    """Saturate ``a`` with shortcut transitions until no label grows."""
    table: dict[tuple[int, int, int], Bdd] = {}
    for t in a.transitions:
        key = (t.src, t.marks, t.dst)
        prev = table.get(key)
        table[key] = t.label if prev is None else prev | t.label
    changed = True
    while changed:
        check_deadline("si_closure")
        changed = False
        by_src: dict[int, list[tuple[int, int, Bdd]]] = {}
        for (s, m, d), f in table.items():
            by_src.setdefault(s, []).append((m, d, f))
        for (q, m1, q1), f1 in list(table.items()):
            for m2, q2, f2 in by_src.get(q1, ()):
                f = f1 & f2
                if f.is_false:
                    continue
                key = (q, m1 | m2, q2)
                old = table.get(key)
                new = f if old is None else old | f
                if new != old:
                    table[key] = new
                    changed = True
    transitions = tuple(Transition(s, f, m, d) for (s, m, d), f in table.items())
    return Tgba(a.manager, a.ap, a.num_states, a.initial, a.num_marks, transitions)


def closure_stutter_states(a: Tgba) -> Tgba:
    """Allow any letter to be repeated after any transition.

    For a transition ``q -f,M-> q'`` and each letter ``ℓ`` of ``f``, a stutter
    state ``d(q', ℓ)`` is entered by ``q -ℓ,M-> d``, loops on ``ℓ`` without
    marks and leaves like ``q'``. Zero-mark automata first get one mark on
    every transition so that stuttering forever stays rejecting.

    Raises:
        StateCapExceededError: Too many atoms to enumerate letters, or more
            states than ``translate_state_cap``.
    """
    cap = get_settings().translate_state_cap
    if len(a.ap) > MAX_LETTER_ATOMS:
        raise ExceptionFactory.state_cap_exceeded("si_closure", cap)
    a = with_all_marks(a, 1)
    mgr = a.manager
    variables = a.ap_vars()
    letters = [
        dict(zip(variables, bits, strict=True))
        for bits in itertools.product((False, True), repeat=len(variables))
    ]
    cubes = [mgr.cube(letter) for letter in letters]

    builder = TgbaBuilder(mgr, a.ap, a.num_marks)
    builder.add_states(a.num_states)
    stutter: dict[tuple[int, int], int] = {}
    for t in a.transitions:
        builder.add(t.src, t.label, t.marks, t.dst)
        for i, letter in enumerate(letters):
            if not mgr.evaluate(t.label, letter):
                continue
            d = stutter.get((t.dst, i))
            if d is None:
                if builder.num_states >= cap:
                    raise ExceptionFactory.state_cap_exceeded("si_closure", cap)
                d = builder.new_state()
                stutter[(t.dst, i)] = d
            builder.add(t.src, cubes[i], t.marks, d)
    for (q, i), d in stutter.items():
        builder.add(d, cubes[i], 0, d)
        for u in a.out[q]:
            builder.add(d, u.label, u.marks, u.dst)
    return builder.build(a.initial)


def si_closure(a: Tgba) -> Tgba:
    """Automaton for the smallest stutter-insensitive language containing ``L(a)``."""
    result = replace(simplify(closure_stutter_states(closure_shortcuts(trim(a)))), stutter_insensitive=True)
    logger.debug("si_closure.done", states_before=a.num_states, states_after=result.num_states)
    return result


def is_stutter_insensitive(a: Tgba, a_neg: Tgba | None = None, cap: int | None = None) -> bool:
    """True iff closing ``a`` under stuttering adds no word.

    ``a_neg`` must recognize the complement of ``L(a)``; when omitted it is
    derived from ``a.formula`` or, failing that, by generic complementation
    bounded by ``cap``.
    """
    neg = a_neg if a_neg is not None else complement_of(a, cap)
    return is_empty(product(si_closure(a), neg))


def ss_part(a: Tgba, a_neg: Tgba | None = None, cap: int | None = None) -> Tgba:
    """Words of ``L(a)`` whose stutter class meets the complement of ``L(a)``.

    Built as ``a ⊗ si(si(a) ⊗ ā)``.
    """
    neg = a_neg if a_neg is not None else complement_of(a, cap)
    added = product(si_closure(a), neg)
    if is_empty(added):
        return Tgba.empty(a.manager, a.ap)
    return simplify(product(a, si_closure(added)))
