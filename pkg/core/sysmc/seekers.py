"""
Knowledge seekers: cheap facts every run of a system satisfies.

Each seeker decides its facts exhaustively on the reachable state graph, so
every emitted fact ``K`` satisfies ``L(S) ⊆ L(K)``. Facts are restricted to a
target alphabet, usually the atoms of the property being checked.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from enum import StrEnum

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    raise ImportError("NetworkX is required for system analysis. Install with: pip install networkx") from None

from pydantic import BaseModel, ConfigDict, Field

from core.boolfn import Bdd, BddManager
from core.config import get_settings
from core.ltl import FALSE, TRUE, And, F, Formula, G, Not, Or, X, atom, atoms, atoms_in_order, from_bdd
from core.sysmc.kripke import Kripke
from core.utils.logging import get_logger

logger = get_logger(__name__)


class FactKind(StrEnum):
    INITIAL = "initial"
    FIRST_STEPS = "first_steps"
    INVARIANT = "invariant"
    COMPAT = "compat"
    CONVERGENT = "convergent"


_KIND_ORDER = {kind: i for i, kind in enumerate(FactKind)}


class Fact(BaseModel):
    """A formula certified to hold on every run of the system it was sought on."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: FactKind = Field(..., description="Procedure family that emitted the fact")
    formula: Formula = Field(..., description="The certified LTL formula")
    evidence: str = Field(default="", description="How the fact was established")

    @property
    def text(self) -> str:
        return str(self.formula)

    def sort_key(self) -> tuple[int, str]:
        return _KIND_ORDER[self.kind], self.text

    def __str__(self) -> str:
        return self.text


def _alphabet(s: Kripke, atoms: Iterable[str] | None) -> tuple[str, ...]:
    if atoms is None:
        return s.ap
    known = set(s.ap)
    return tuple(x for x in dict.fromkeys(atoms) if x in known)


def _literal(name: str, value: bool) -> Formula:
    return atom(name) if value else Not(atom(name))


def _next(f: Formula, depth: int) -> Formula:
    for _ in range(depth):
        f = X(f)
    return f


def seek_initial(s: Kripke, atoms: Iterable[str] | None = None) -> Fact:
    """Full literal conjunction of the initial valuation over the alphabet."""
    alphabet = _alphabet(s, atoms)
    val = s.valuations[s.initial]
    formula = And(*(_literal(x, x in val) for x in alphabet)) if alphabet else TRUE
    return Fact(kind=FactKind.INITIAL, formula=formula, evidence=f"label of state {s.names[s.initial]}")


def seek_first_steps(
    s: Kripke,
    depth: int | None = None,
    atoms: Iterable[str] | None = None,
    frontier_cap: int | None = None,
) -> list[Fact]:
    """``X^d f`` facts where ``f`` covers the valuations reachable in exactly ``d`` steps.

    A depth whose frontier exceeds ``frontier_cap`` states is skipped, and so
    is everything beyond it; the truncation is logged as a warning.
    """
    settings = get_settings()
    n = settings.first_steps_depth if depth is None else depth
    cap = settings.frontier_cap if frontier_cap is None else frontier_cap
    if n < 1:
        raise ValueError("first-steps depth must be at least 1")
    alphabet = _alphabet(s, atoms)
    mgr = BddManager()
    mgr.declare_all(alphabet)

    facts: list[Fact] = []
    frontier = {s.initial}
    for d in range(1, n + 1):
        frontier = {dst for q in frontier for dst in s.successors[q]}
        if len(frontier) > cap:
            logger.warning(
                "seek.first_steps_truncated", depth=d, last_depth=n, frontier=len(frontier), cap=cap
            )
            break
        cover = mgr.disjoin(
            mgr.cube({mgr.var_index(x): x in s.valuations[q] for x in alphabet}) for q in sorted(frontier)
        )
        if cover.is_true:
            continue
        facts.append(
            Fact(
                kind=FactKind.FIRST_STEPS,
                formula=_next(from_bdd(cover), d),
                evidence=f"{len(frontier)} states at depth {d}",
            )
        )
    return facts


def _holds_everywhere(s: Kripke, label: Bdd) -> bool:
    mgr = label.manager
    return all(mgr.evaluate_names(label, s.valuations[q]) for q in s.reachable)


def seek_invariants(
    s: Kripke,
    labels: Iterable[Bdd] = (),
    atoms: Iterable[str] | None = None,
) -> list[Fact]:
    """``G`` facts: constant atoms, impossible value pairs and invariant labels.

    Pairs involving a constant atom are not reported; their impossible
    combinations already follow from the constant facts.
    """
    alphabet = _alphabet(s, atoms)
    reached = [s.valuations[q] for q in s.reachable]
    evidence = f"exhaustive reachability over {len(reached)} states"
    facts: list[Fact] = []

    values = {x: {x in val for val in reached} for x in alphabet}
    constant = {x: next(iter(v)) for x, v in values.items() if len(v) == 1}
    for x, value in constant.items():
        facts.append(Fact(kind=FactKind.INVARIANT, formula=G(_literal(x, value)), evidence=evidence))

    varying = [x for x in alphabet if x not in constant]
    for x, y in itertools.combinations(varying, 2):
        seen = {(x in val, y in val) for val in reached}
        for vx, vy in itertools.product((True, False), repeat=2):
            if (vx, vy) not in seen:
                formula = G(Not(And(_literal(x, vx), _literal(y, vy))))
                facts.append(Fact(kind=FactKind.COMPAT, formula=formula, evidence=evidence))

    known = set(s.ap)
    emitted = {f.formula for f in facts}
    for label in labels:
        if label.is_true or label.is_false:
            continue
        mgr = label.manager
        if any(mgr.var_name(v) not in known for v in mgr.support(label)):
            continue
        if not _holds_everywhere(s, label):
            continue
        formula = G(from_bdd(label))
        if formula in emitted:
            continue
        emitted.add(formula)
        facts.append(Fact(kind=FactKind.INVARIANT, formula=formula, evidence="label holds in every reachable state"))
    return facts


def _cyclic_components(s: Kripke) -> list[set[int]]:
    g = s.graph
    return [c for c in nx.strongly_connected_components(g) if len(c) > 1 or any(g.has_edge(q, q) for q in c)]


def seek_convergent(s: Kripke, atoms: Iterable[str] | None = None) -> list[Fact]:
    """``F(G a | G !a)`` for atoms constant inside every cycle-containing SCC.

    Every infinite run eventually stays in one such component, so the atom
    stabilizes. When all components agree on the value, the fact is
    strengthened to ``F G a`` or ``F G !a``.
    """
    components = _cyclic_components(s)
    facts: list[Fact] = []
    for x in _alphabet(s, atoms):
        finals: set[bool] = set()
        converges = True
        for comp in components:
            inside = {x in s.valuations[q] for q in comp}
            if len(inside) > 1:
                converges = False
                break
            finals |= inside
        if not converges:
            continue
        if len(finals) == 1:
            formula = F(G(_literal(x, next(iter(finals)))))
        else:
            formula = F(Or(G(atom(x)), G(Not(atom(x)))))
        facts.append(
            Fact(kind=FactKind.CONVERGENT, formula=formula, evidence=f"constant within {len(components)} cyclic SCCs")
        )
    return facts


def canonical(facts: Iterable[Fact]) -> list[Fact]:
    """Deduplicate by formula and order by kind, then formula text."""
    unique: dict[Formula, Fact] = {}
    for fact in sorted(facts, key=Fact.sort_key):
        unique.setdefault(fact.formula, fact)
    return list(unique.values())


def seek_all(
    s: Kripke,
    phi: Formula,
    labels: Sequence[Bdd] | None = None,
    depth: int | None = None,
    frontier_cap: int | None = None,
) -> list[Fact]:
    """Run every seeker restricted to the atoms of ``phi``.

    ``labels`` default to the transition labels of the automaton of ``¬phi``.
    Tautologies and convergence facts implied by a constant invariant are
    dropped.
    """
    alphabet = _alphabet(s, atoms_in_order(phi))
    if labels is None:
        from core.given import raw_automaton

        raw = raw_automaton(phi)
        labels = list(dict.fromkeys(t.label for t in raw.transitions))

    found = [seek_initial(s, alphabet)]
    found += seek_first_steps(s, depth, alphabet, frontier_cap)
    invariants = seek_invariants(s, labels, alphabet)
    found += invariants
    literals = (f.formula.args[0] for f in invariants)
    settled = {lit.name if lit.is_atom else lit.args[0].name for lit in literals if lit.is_literal}
    found += [f for f in seek_convergent(s, alphabet) if not atoms(f.formula) & settled]
    facts = [f for f in canonical(found) if f.formula not in (TRUE, FALSE)]
    logger.debug("seek.done", facts=len(facts), alphabet=list(alphabet))
    return facts
