"""
Knowledge facts: LTL properties known to hold on the system, each paired
with its automaton.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from core.automaton import Tgba
from core.boolfn import BddManager
from core.ltl import TRUE, And, Formula, atoms
from core.translate import simplify, translate
from core.utils.exceptions import ResourceError, TimeoutExceededError
from core.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class KnowledgeFact:
    formula: Formula
    automaton: Tgba
    source: str = "user"

    @property
    def atoms(self) -> frozenset[str]:
        return atoms(self.formula)

    def __str__(self) -> str:
        return str(self.formula)


def fact_automaton(formula: Formula, manager: BddManager) -> Tgba:
    return simplify(translate(formula, manager))


class KnowledgeBase:
    """Ordered facts sharing one BDD manager.

    Order matters: incremental strategies integrate facts in list order.
    """

    def __init__(
        self,
        facts: Iterable[KnowledgeFact] = (),
        manager: BddManager | None = None,
        skipped: Iterable[Formula] = (),
    ) -> None:
        self.facts: tuple[KnowledgeFact, ...] = tuple(facts)
        self.manager = manager or (self.facts[0].automaton.manager if self.facts else BddManager())
        self.skipped: tuple[Formula, ...] = tuple(skipped)

    @classmethod
    def from_formulas(
        cls,
        formulas: Iterable[Formula],
        manager: BddManager | None = None,
        source: str = "user",
    ) -> KnowledgeBase:
        """Translate each formula; facts whose translation hits a cap are skipped."""
        mgr = manager or BddManager()
        facts: list[KnowledgeFact] = []
        skipped: list[Formula] = []
        for f in formulas:
            try:
                facts.append(KnowledgeFact(f, fact_automaton(f, mgr), source))
            except TimeoutExceededError:
                raise
            except ResourceError as exc:
                logger.warning("knowledge.fact_skipped", fact=str(f), reason=exc.message)
                skipped.append(f)
        return cls(facts, mgr, skipped)

    def __iter__(self) -> Iterator[KnowledgeFact]:
        return iter(self.facts)

    def __len__(self) -> int:
        return len(self.facts)

    def __bool__(self) -> bool:
        return bool(self.facts)

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(f.formula for f in self.facts)

    def relevant_to(self, phi: Formula) -> KnowledgeBase:
        """Facts whose alphabet intersects that of ``phi``."""
        wanted = atoms(phi)
        kept = [f for f in self.facts if f.atoms & wanted]
        if len(kept) == len(self.facts):
            return self
        logger.debug("knowledge.filtered", kept=len(kept), dropped=len(self.facts) - len(kept))
        return KnowledgeBase(kept, self.manager, self.skipped)

    @cached_property
    def conjunction(self) -> KnowledgeFact:
        """Single fact for the conjunction of all facts (``⊤`` when empty)."""
        if not self.facts:
            return KnowledgeFact(TRUE, Tgba.universal(self.manager, (), TRUE), "conjunction")
        if len(self.facts) == 1:
            return self.facts[0]
        formula = And(*self.formulas)
        return KnowledgeFact(formula, fact_automaton(formula, self.manager), "conjunction")

    def single(self) -> KnowledgeBase:
        """Knowledge base holding only :attr:`conjunction`."""
        if not self.facts:
            return self
        return KnowledgeBase([self.conjunction], self.manager, self.skipped)
