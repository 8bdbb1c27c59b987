"""Cheap structural checks on TGBAs."""

from enum import StrEnum

from core.automaton.scc import scc_info
from core.automaton.tgba import Tgba


class Strength(StrEnum):
    TERMINAL = "terminal"
    WEAK = "weak"
    GENERAL = "general"


def is_universal_syntactic(a: Tgba) -> bool:
    """One state whose labels cover ⊤, every transition carrying all marks.

    Sound but not complete: a universal language may have a larger automaton.
    """
    if a.num_states != 1:
        return False
    full = a.acceptance_mask
    if any(t.marks != full for t in a.transitions):
        return False
    return a.manager.disjoin(t.label for t in a.transitions).is_true


def is_deterministic(a: Tgba) -> bool:
    """Outgoing labels of every state are pairwise disjoint."""
    for out in a.out:
        for i, t in enumerate(out):
            for u in out[i + 1 :]:
                if t.label.intersects(u.label):
                    return False
    return True


def strength(a: Tgba) -> Strength:
    """Classify by SCC structure of the reachable part.

    Weak: inside every accepting SCC, every internal transition carries all
    marks. Terminal: weak, and every state of an accepting SCC has internal
    labels covering ⊤.
    """
    info = scc_info(a)
    full = a.acceptance_mask
    mgr = a.manager
    terminal = True
    for c, members in enumerate(info.members):
        if not info.accepting[c] or not members & info.reachable:
            continue
        for q in members:
            internal = [t for t in a.out[q] if t.dst in members]
            if any(t.marks != full for t in internal):
                return Strength.GENERAL
            if terminal and not mgr.disjoin(t.label for t in internal).is_true:
                terminal = False
    return Strength.TERMINAL if terminal else Strength.WEAK
