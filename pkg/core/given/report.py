"""Strategy outcome reports."""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.automaton import AutomatonStats


class Outcome(StrEnum):
    EMPTY = "empty"
    UNIVERSAL = "universal"
    SIMPLIFIED = "simplified"
    UNCHANGED = "unchanged"


class StrategyReport(BaseModel):
    """What one strategy did to one problem."""

    model_config = ConfigDict(frozen=True)

    strategy: str = Field(..., description="Strategy name as requested")
    outcome: Outcome = Field(..., description="empty, universal, simplified or unchanged")
    before: AutomatonStats = Field(..., description="Stats of the raw automaton")
    after: AutomatonStats = Field(..., description="Stats of the strategy output")
    time_ms: float = Field(..., ge=0, description="Wall time of the strategy pipeline")
    flags: list[str] = Field(default_factory=list, description="Degradations and skipped facts")

    @model_validator(mode="after")
    def _outcome_matches_stats(self) -> StrategyReport:
        if self.outcome is Outcome.EMPTY and self.after.transitions != 0:
            raise ValueError("empty outcome requires an automaton without transitions")
        return self
