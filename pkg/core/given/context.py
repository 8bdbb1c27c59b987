"""Per-run state shared by the stages of a strategy pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field

from pydantic import BaseModel, Field

from core.automaton import Tgba
from core.boolfn import BddManager
from core.complement import complement_of
from core.given.knowledge import KnowledgeBase
from core.ltl import Formula


class StrategyOptions(BaseModel):
    """Tunables of one strategy run."""

    complement_cap: int | None = Field(
        default=None, ge=1, description="Generic complementation budget; settings default when None"
    )
    stats_si_cap: int | None = Field(
        default=None,
        ge=1,
        description="Generic complementation budget for SI stats of formula-less results; None reports unknown",
    )


@dataclass
class StrategyContext:
    phi: Formula
    kb: KnowledgeBase
    manager: BddManager
    options: StrategyOptions = field(default_factory=StrategyOptions)
    flags: list[str] = field(default_factory=list)

    def flag(self, name: str) -> None:
        if name not in self.flags:
            self.flags.append(name)

    def negation(self, a: Tgba) -> Tgba:
        """Complement of ``a``: via its formula when known, else generic and capped."""
        return complement_of(a, self.options.complement_cap)
