"""
Boolean bounds on transition labels.

Every transition keeps its original label ``f`` and an interval
``[low, high]`` with ``low ⇒ f ⇒ high``. Integrating a knowledge automaton
strengthens ``low`` with the transition guarantee and weakens ``high`` with
the negated state guarantee; relabeling then picks an irredundant cover
inside the interval.

- State guarantee of ``q``: disjunction of the knowledge labels leaving any
  knowledge state paired with ``q`` in the trimmed product.
- Transition guarantee of ``t``: disjunction of the knowledge labels that
  synchronize with ``t`` in the trimmed product.
"""

from __future__ import annotations

from dataclasses import dataclass

from core.automaton import Tgba, Transition, product_with_origins, relabel, trim_with_map
from core.boolfn import Bdd, isop_bdd
from core.translate import simplify
from core.utils.exceptions import InvariantViolationError
from core.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BoundedTgba:
    automaton: Tgba
    low: tuple[Bdd, ...]
    high: tuple[Bdd, ...]

    def __post_init__(self) -> None:
        if not len(self.low) == len(self.high) == self.automaton.num_transitions:
            raise InvariantViolationError("one bound pair per transition is required")
        for i, (lo, hi) in enumerate(zip(self.low, self.high, strict=True)):
            if not lo.implies(hi):
                raise InvariantViolationError("lower bound does not imply upper bound", details={"transition": i})

    @classmethod
    def of(cls, a: Tgba) -> BoundedTgba:
        labels = tuple(t.label for t in a.transitions)
        return cls(a, labels, labels)

    @property
    def transitions(self) -> tuple[Transition, ...]:
        return self.automaton.transitions


@dataclass(frozen=True)
class Guarantees:
    state: tuple[Bdd, ...]
    transition: tuple[Bdd, ...]


def quantify_knowledge(a_k: Tgba, a: Tgba) -> Tgba:
    """``a_k`` with atoms outside ``a``'s alphabet existentially quantified.

    Labels are moved into ``a``'s manager.
    """
    mgr = a.manager
    keep = set(a.ap)
    labels = [mgr.transfer(t.label) for t in a_k.transitions]
    drop = [mgr.var_index(x) for x in a_k.ap if x not in keep]
    if drop:
        labels = [mgr.exists(f, drop) for f in labels]
    transitions = tuple(
        Transition(t.src, f, t.marks, t.dst) for t, f in zip(a_k.transitions, labels, strict=True)
    )
    ap = tuple(x for x in a_k.ap if x in keep)
    return Tgba(mgr, ap, a_k.num_states, a_k.initial, a_k.num_marks, transitions)


def compute_guarantees(a: Tgba, k: Tgba) -> Guarantees:
    """State and transition guarantees of ``a`` with respect to ``k``.

    ``k`` must already be over ``a``'s alphabet and manager.
    """
    mgr = a.manager
    prod = product_with_origins(a, k)
    _, kept, _ = trim_with_map(prod.automaton)
    out_k = [mgr.disjoin(t.label for t in k.out[s]) for s in range(k.num_states)]

    tg = [mgr.false] * a.num_transitions
    live_pairs: set[int] = set()
    for p in kept:
        i, j = prod.origins[p]
        tg[i] = tg[i] | k.transitions[j].label
        t = prod.automaton.transitions[p]
        live_pairs.update((t.src, t.dst))

    sg = [mgr.false] * a.num_states
    for p in live_pairs:
        q, s = prod.states[p]
        sg[q] = sg[q] | out_k[s]
    return Guarantees(tuple(sg), tuple(tg))


def update_bounds_given(b: BoundedTgba, a_k: Tgba) -> BoundedTgba:
    """Integrate knowledge ``a_k`` into the bounds of ``b``.

    The product reads each transition through its current lower bound, so
    successive updates compose. Lower bounds only get stronger and upper
    bounds only weaker.
    """
    a = b.automaton
    k = quantify_knowledge(a_k, a)
    alive = [i for i, lo in enumerate(b.low) if not lo.is_false]
    low_view = Tgba(
        a.manager,
        a.ap,
        a.num_states,
        a.initial,
        a.num_marks,
        tuple(a.transitions[i]._replace(label=b.low[i]) for i in alive),
    )
    g = compute_guarantees(low_view, k)
    tg = [a.manager.false] * a.num_transitions
    for pos, i in enumerate(alive):
        tg[i] = g.transition[pos]
    low = tuple(lo & t for lo, t in zip(b.low, tg, strict=True))
    high = tuple(hi | ~g.state[t.src] for hi, t in zip(b.high, a.transitions, strict=True))
    logger.debug(
        "bounds.updated",
        transitions=a.num_transitions,
        emptied=sum(1 for lo in low if lo.is_false),
    )
    return BoundedTgba(a, low, high)


def bounds_simplify(b: BoundedTgba) -> Tgba:
    """Relabel each transition with an irredundant cover inside its bounds, then simplify."""
    labels = [isop_bdd(lo, hi) for lo, hi in zip(b.low, b.high, strict=True)]
    return simplify(relabel(b.automaton, labels))
