"""
SCC-based analyses: emptiness, trimming and accepting-lasso extraction.

An SCC is accepting when it has at least one internal transition and the
union of the marks of its internal transitions is the full acceptance set.
The language is non-empty iff an accepting SCC is reachable from the
initial state.
"""

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    raise ImportError("NetworkX is required for SCC analysis. Install with: pip install networkx") from None

from core.automaton.tgba import Tgba, Transition, renumber
from core.utils.budget import check_deadline

Edge = tuple[int, int, int]  # (src, marks, dst)

_SINK = -1


@dataclass(frozen=True)
class SccInfo:
    """SCC decomposition of an edge list."""

    component: dict[int, int]
    members: list[frozenset[int]]
    internal_marks: list[int]
    has_cycle: list[bool]
    accepting: list[bool]
    reachable: frozenset[int]

    def is_internal(self, src: int, dst: int) -> bool:
        return self.component[src] == self.component[dst]


def _digraph(num_nodes: int, edges: Iterable[Edge]) -> "nx.DiGraph":
    g = nx.DiGraph()
    g.add_nodes_from(range(num_nodes))
    g.add_edges_from((s, d) for s, _, d in edges)
    return g


def analyse(num_nodes: int, initial: int, edges: Sequence[Edge], full: int) -> SccInfo:
    check_deadline("scc")
    g = _digraph(num_nodes, edges)
    members = [frozenset(c) for c in nx.strongly_connected_components(g)]
    component = {q: i for i, c in enumerate(members) for q in c}
    internal = [0] * len(members)
    cyclic = [False] * len(members)
    for s, m, d in edges:
        c = component[s]
        if c == component[d]:
            internal[c] |= m
            cyclic[c] = True
    accepting = [cyclic[i] and internal[i] & full == full for i in range(len(members))]
    reachable = frozenset(nx.descendants(g, initial)) | {initial}
    return SccInfo(component, members, internal, cyclic, accepting, reachable)


def _coreachable(num_nodes: int, edges: Sequence[Edge], info: SccInfo) -> frozenset[int]:
    """States from which some accepting SCC can be reached."""
    g = _digraph(num_nodes, edges)
    targets = [q for i, c in enumerate(info.members) if info.accepting[i] for q in c]
    if not targets:
        return frozenset()
    g.add_node(_SINK)
    g.add_edges_from((q, _SINK) for q in targets)
    return frozenset(nx.ancestors(g, _SINK))


def _edges(a: Tgba) -> list[Edge]:
    return [(t.src, t.marks, t.dst) for t in a.transitions]


def scc_info(a: Tgba) -> SccInfo:
    return analyse(a.num_states, a.initial, _edges(a), a.acceptance_mask)


def graph_is_empty(num_nodes: int, initial: int, edges: Sequence[Edge], full: int) -> bool:
    info = analyse(num_nodes, initial, edges, full)
    return not any(info.accepting[info.component[q]] for q in info.reachable)


def is_empty(a: Tgba) -> bool:
    """True iff ``a`` has no accepting run."""
    return graph_is_empty(a.num_states, a.initial, _edges(a), a.acceptance_mask)


def useful_transitions(a: Tgba) -> list[bool]:
    """Per transition: does it occur on some accepting run?"""
    edges = _edges(a)
    info = analyse(a.num_states, a.initial, edges, a.acceptance_mask)
    live = _coreachable(a.num_states, edges, info)
    return [t.src in info.reachable and t.dst in live for t in a.transitions]


def trim_with_map(a: Tgba) -> tuple[Tgba, list[int], dict[int, int]]:
    """Trim ``a``; also return kept transition indices and the old-to-new state map."""
    keep = useful_transitions(a)
    kept_idx = [i for i, k in enumerate(keep) if k]
    trimmed, order = renumber(a, (a.transitions[i] for i in kept_idx), formula=a.formula)
    return trimmed, kept_idx, order


def trim(a: Tgba) -> Tgba:
    """Restrict ``a`` to the transitions that occur on at least one accepting run."""
    return trim_with_map(a)[0]


def _bfs_path(
    out: Sequence[Sequence[Transition]],
    start: int,
    goal,
    allowed: frozenset[int] | None = None,
) -> list[Transition] | None:
    """Shortest transition path from ``start`` to a state satisfying ``goal``."""
    if goal(start):
        return []
    parent: dict[int, Transition] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for t in out[q]:
            if t.dst in seen or (allowed is not None and t.dst not in allowed):
                continue
            seen.add(t.dst)
            parent[t.dst] = t
            if goal(t.dst):
                path = [t]
                while path[-1].src != start:
                    path.append(parent[path[-1].src])
                return path[::-1]
            queue.append(t.dst)
    return None


def find_accepting_lasso(a: Tgba) -> tuple[list[Transition], list[Transition]] | None:
    """Transitions of an accepting run ``prefix · cycle^ω``, or None when empty.

    The cycle is non-empty, starts and ends in the same state, and its marks
    cover the whole acceptance set.
    """
    info = scc_info(a)
    candidates = {i for i, acc in enumerate(info.accepting) if acc}
    if not candidates:
        return None
    prefix = _bfs_path(a.out, a.initial, lambda q: info.component[q] in candidates)
    if prefix is None:
        return None
    anchor = prefix[-1].dst if prefix else a.initial
    scc = info.members[info.component[anchor]]
    internal = [t for t in a.transitions if t.src in scc and t.dst in scc]

    cycle: list[Transition] = []
    here = anchor
    missing = a.acceptance_mask
    while True:
        wanted = next((t for t in internal if t.marks & missing), None)
        if wanted is None:
            if cycle:
                break
            wanted = internal[0]
        step = _bfs_path(a.out, here, lambda q, s=wanted.src: q == s, scc)
        assert step is not None
        cycle.extend(step)
        cycle.append(wanted)
        for t in step:
            missing &= ~t.marks
        missing &= ~wanted.marks
        here = wanted.dst
        if not missing:
            break
    back = _bfs_path(a.out, here, lambda q: q == anchor, scc)
    assert back is not None
    cycle.extend(back)
    return prefix, cycle
