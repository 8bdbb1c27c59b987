"""Model checking with knowledge: simplify the negated property, then check."""

from __future__ import annotations

from collections.abc import Iterable

from core.boolfn import BddManager
from core.given import KnowledgeBase, Outcome, StrategyOptions, StrategyReport, run_strategy
from core.ltl import Formula
from core.sysmc.check import Verdict, VerdictStatus, check
from core.sysmc.kripke import Kripke
from core.sysmc.seekers import Fact
from core.utils.logging import LogContext, get_logger

logger = get_logger(__name__)

GATE_STRATEGY = "p.min∃"


def _knowledge(facts: Iterable[Formula | Fact] | KnowledgeBase, manager: BddManager) -> KnowledgeBase:
    if isinstance(facts, KnowledgeBase):
        return facts
    formulas = [f.formula if isinstance(f, Fact) else f for f in facts]
    return KnowledgeBase.from_formulas(formulas, manager, source="seeker")


def model_check(
    s: Kripke,
    phi: Formula,
    facts: Iterable[Formula | Fact] | KnowledgeBase = (),
    strategy: str = "raw",
    gate: bool = False,
    opts: StrategyOptions | None = None,
) -> tuple[Verdict, StrategyReport]:
    """Check ``s ⊨ phi`` on the automaton produced by ``strategy``.

    With ``gate``, the restriction by projected knowledge runs first and an
    empty result answers ``holds`` without building the product.
    """
    kb = _knowledge(facts, BddManager())
    with LogContext(phase="model_check"):
        if gate:
            _, gated = run_strategy(GATE_STRATEGY, phi, kb, opts)
            if gated.outcome is Outcome.EMPTY:
                logger.debug("check.gated", strategy=GATE_STRATEGY)
                return Verdict(VerdictStatus.HOLDS, reason=f"{GATE_STRATEGY} is empty"), gated
        automaton, report = run_strategy(strategy, phi, kb, opts)
        verdict = check(s, automaton)
    logger.debug("check.verdict", strategy=strategy, status=verdict.status.value)
    return verdict, report
