"""Counter-based degeneralization of TGBAs to a single acceptance mark."""

from collections import deque

from core.automaton import Tgba, TgbaBuilder, with_all_marks
from core.utils.budget import check_deadline


def degeneralize(a: Tgba) -> Tgba:
    """Equivalent automaton with exactly one acceptance mark.

    States are pairs ``(q, level)`` where ``level`` is the next mark awaited.
    A transition advances the level over every consecutive mark it carries;
    reaching the last level emits mark 0 and resets to level 0.
    """
    if a.num_marks == 0:
        return with_all_marks(a, 1)
    if a.num_marks == 1:
        return a
    m = a.num_marks
    builder = TgbaBuilder(a.manager, a.ap, 1)
    start = (a.initial, 0)
    index = {start: builder.new_state()}
    queue = deque([start])
    while queue:
        check_deadline("degeneralize")
        q, level = queue.popleft()
        src = index[(q, level)]
        for t in a.out[q]:
            j = level
            while j < m and t.marks >> j & 1:
                j += 1
            accepting = j == m
            nxt = (t.dst, 0 if accepting else j)
            dst = index.get(nxt)
            if dst is None:
                dst = builder.new_state()
                index[nxt] = dst
                queue.append(nxt)
            builder.add(src, t.label, 1 if accepting else 0, dst)
    return builder.build(0, a.formula)
