"""
LTL to TGBA translation by symbolic tableau expansion.

A state is the set of obligations (NNF subformulas) still to satisfy. Each
obligation unfolds into alternatives ``(label, next, postponed)``: the
letters allowed now, the obligations for the next step, and the
eventualities (``U``/``F`` subformulas) whose fulfilment is delayed. A
state's successors are the conjunctions of one alternative per obligation.

Every eventuality of the formula owns one acceptance mark; a transition
carries every mark except those of the eventualities it postpones.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from typing import NamedTuple

from core.automaton import Tgba, TgbaBuilder, check_mark_count, full_mask
from core.boolfn import Bdd, BddManager
from core.config import get_settings
from core.ltl import TRUE, Formula, Op, atoms_in_order, iter_subformulas, nnf, simplify_light
from core.utils.budget import check_deadline
from core.utils.exceptions import ExceptionFactory
from core.utils.logging import get_logger

logger = get_logger(__name__)

State = frozenset[Formula]


class Alternative(NamedTuple):
    label: Bdd
    next: frozenset[Formula]
    postponed: frozenset[Formula]


_NONE: frozenset[Formula] = frozenset()


def _combine(xs: list[Alternative], ys: list[Alternative]) -> list[Alternative]:
    out = []
    for x in xs:
        for y in ys:
            label = x.label & y.label
            if not label.is_false:
                out.append(Alternative(label, x.next | y.next, x.postponed | y.postponed))
    return _reduce(out)


def _reduce(alts: Iterable[Alternative]) -> list[Alternative]:
    """Merge alternatives with equal obligations and drop dominated ones.

    ``x`` is dominated by ``y`` when ``x.label ⇒ y.label`` and ``y`` has no
    more next obligations and no more postponements than ``x``.
    """
    merged: dict[tuple[frozenset[Formula], frozenset[Formula]], Bdd] = {}
    for alt in alts:
        key = (alt.next, alt.postponed)
        prev = merged.get(key)
        merged[key] = alt.label if prev is None else prev | alt.label
    items = [Alternative(label, n, p) for (n, p), label in merged.items()]
    kept: list[Alternative] = []
    for i, x in enumerate(items):
        dominated = any(
            j != i and y.next <= x.next and y.postponed <= x.postponed and x.label.implies(y.label)
            for j, y in enumerate(items)
        )
        if not dominated:
            kept.append(x)
    return kept


class _Expander:
    def __init__(self, manager: BddManager) -> None:
        self.mgr = manager
        self.cache: dict[Formula, list[Alternative]] = {}

    def step(self, nxt: Iterable[Formula] = (), postponed: Iterable[Formula] = ()) -> list[Alternative]:
        return [Alternative(self.mgr.true, frozenset(nxt), frozenset(postponed))]

    def expand(self, f: Formula) -> list[Alternative]:
        hit = self.cache.get(f)
        if hit is not None:
            return hit
        match f.op:
            case Op.TRUE:
                r = self.step()
            case Op.FALSE:
                r = []
            case Op.ATOM:
                r = [Alternative(self.mgr.var(f.name or ""), _NONE, _NONE)]
            case Op.NOT:
                r = [Alternative(~self.mgr.var(f.args[0].name or ""), _NONE, _NONE)]
            case Op.AND:
                r = self.step()
                for g in f.args:
                    r = _combine(r, self.expand(g))
            case Op.OR:
                r = _reduce(alt for g in f.args for alt in self.expand(g))
            case Op.NEXT:
                (g,) = f.args
                r = self.step() if g.op is Op.TRUE else self.step([g])
            case Op.UNTIL:
                a, b = f.args
                r = _reduce([*self.expand(b), *_combine(self.expand(a), self.step([f], [f]))])
            case Op.EVENTUALLY:
                (b,) = f.args
                r = _reduce([*self.expand(b), *self.step([f], [f])])
            case Op.RELEASE:
                a, b = f.args
                now = self.expand(b)
                r = _reduce([*_combine(now, self.expand(a)), *_combine(now, self.step([f]))])
            case Op.ALWAYS:
                (b,) = f.args
                r = _combine(self.expand(b), self.step([f]))
            case _:
                raise ValueError(f"formula not in negation normal form: {f}")
        self.cache[f] = r
        return r

    def successors(self, state: State) -> list[Alternative]:
        r = self.step()
        for f in sorted(state, key=str):
            r = _combine(r, self.expand(f))
            if not r:
                break
        return r


def eventualities(f: Formula) -> list[Formula]:
    """Distinct ``U``/``F`` subformulas of ``f`` in first-occurrence order."""
    seen: dict[Formula, None] = {}
    for g in iter_subformulas(f):
        if g.op in (Op.UNTIL, Op.EVENTUALLY):
            seen.setdefault(g, None)
    return list(seen)


def translate(f: Formula, manager: BddManager | None = None) -> Tgba:
    """Build a TGBA recognizing exactly the models of ``f``.

    The result records ``f`` as its formula. Atoms are declared in
    first-occurrence order.

    Raises:
        StateCapExceededError: More states than ``translate_state_cap``.
        MarkCapExceededError: More eventualities than the mark cap.
    """
    settings = get_settings()
    mgr = manager or BddManager()
    ap = atoms_in_order(f)
    g = simplify_light(nnf(f))
    marks = eventualities(g)
    check_mark_count(len(marks), "translate")
    mark_bit = {e: 1 << i for i, e in enumerate(marks)}
    full = full_mask(len(marks))

    builder = TgbaBuilder(mgr, ap, len(marks))
    if g.op is Op.FALSE:
        return builder.build(formula=f)

    expander = _Expander(mgr)
    initial: State = frozenset({g}) - {TRUE}
    index = {initial: builder.new_state()}
    queue = deque([initial])
    cap = settings.translate_state_cap
    while queue:
        check_deadline("translate")
        state = queue.popleft()
        src = index[state]
        for alt in expander.successors(state):
            dst_state = alt.next - {TRUE}
            dst = index.get(dst_state)
            if dst is None:
                if len(index) >= cap:
                    raise ExceptionFactory.state_cap_exceeded("translate", cap)
                dst = builder.new_state()
                index[dst_state] = dst
                queue.append(dst_state)
            pending = 0
            for e in alt.postponed:
                pending |= mark_bit[e]
            builder.add(src, alt.label, full & ~pending, dst)
    result = builder.build(index[initial], formula=f)
    logger.debug("translate.done", states=result.num_states, marks=result.num_marks, formula=str(f))
    return result
