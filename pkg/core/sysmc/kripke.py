"""Explicit Kripke structures."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    raise ImportError("NetworkX is required for system analysis. Install with: pip install networkx") from None

from core.utils.exceptions import InvariantViolationError


@dataclass(frozen=True, eq=False)
class Kripke:
    """States ``0..n-1`` with total valuations; every state has a successor.

    Attributes:
        ap: Atom names.
        names: External state identifiers, by state index.
        valuations: Atoms true in each state.
        initial: Initial state index.
        successors: Successor indices per state.
    """

    ap: tuple[str, ...]
    names: tuple[str, ...]
    valuations: tuple[frozenset[str], ...]
    initial: int
    successors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.names)
        if n == 0:
            raise InvariantViolationError("a system needs at least one state")
        if not (len(self.valuations) == len(self.successors) == n):
            raise InvariantViolationError("per-state tables have different lengths")
        if not 0 <= self.initial < n:
            raise InvariantViolationError("initial state out of range", details={"initial": self.initial})
        known = set(self.ap)
        for i, (val, succ) in enumerate(zip(self.valuations, self.successors, strict=True)):
            if not val <= known:
                raise InvariantViolationError("valuation mentions unknown atoms", details={"state": self.names[i]})
            if not succ:
                raise InvariantViolationError("state without successor", details={"state": self.names[i]})
            if any(not 0 <= s < n for s in succ):
                raise InvariantViolationError("edge to unknown state", details={"state": self.names[i]})

    @classmethod
    def build(
        cls,
        ap: Iterable[str],
        states: Sequence[tuple[str, Iterable[str]]],
        initial: str,
        edges: Iterable[tuple[str, str]],
    ) -> Kripke:
        """Build from named states and edges; dead ends get a self-loop.

        Example:
            >>> Kripke.build("a", [("s0", {"a"}), ("s1", set())], "s0", [("s0", "s1"), ("s1", "s0")])
        """
        names = tuple(name for name, _ in states)
        index = {name: i for i, name in enumerate(names)}
        succ: list[list[int]] = [[] for _ in names]
        for src, dst in edges:
            if src not in index or dst not in index:
                raise InvariantViolationError("edge references an undeclared state", details={"edge": f"{src}->{dst}"})
            if index[dst] not in succ[index[src]]:
                succ[index[src]].append(index[dst])
        for i, s in enumerate(succ):
            if not s:
                s.append(i)
        if initial not in index:
            raise InvariantViolationError("initial state is undeclared", details={"initial": initial})
        return cls(
            tuple(ap),
            names,
            tuple(frozenset(v) for _, v in states),
            index[initial],
            tuple(tuple(s) for s in succ),
        )

    @property
    def num_states(self) -> int:
        return len(self.names)

    def valuation(self, state: int) -> frozenset[str]:
        return self.valuations[state]

    def project(self, state: int, atoms: Iterable[str]) -> frozenset[str]:
        return self.valuations[state] & frozenset(atoms)

    def literals(self, state: int, atoms: Iterable[str]) -> Mapping[str, bool]:
        """Truth value of each of ``atoms`` in ``state``."""
        val = self.valuations[state]
        return {a: a in val for a in atoms}

    @cached_property
    def reachable(self) -> tuple[int, ...]:
        """Reachable states in BFS order from the initial state."""
        seen = {self.initial}
        order = [self.initial]
        queue = deque([self.initial])
        while queue:
            q = queue.popleft()
            for s in self.successors[q]:
                if s not in seen:
                    seen.add(s)
                    order.append(s)
                    queue.append(s)
        return tuple(order)

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Reachable state graph."""
        g = nx.DiGraph()
        g.add_nodes_from(self.reachable)
        g.add_edges_from((q, s) for q in self.reachable for s in self.successors[q])
        return g

    def is_path(self, states: Sequence[int]) -> bool:
        if not states or states[0] != self.initial:
            return False
        return all(b in self.successors[a] for a, b in zip(states, states[1:]))

    def __repr__(self) -> str:
        return f"Kripke(states={self.num_states}, ap={list(self.ap)})"
