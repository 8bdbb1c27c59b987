"""
Strategy roster and the pipeline driver.

Every strategy starts from the simplified automaton of ``¬φ``. Precise
(``p.``) stages integrate the conjunction of all facts at once; the others
integrate facts one by one in knowledge-base order. ``A+B`` names run the
stages of ``A`` then ``B``.
"""

from __future__ import annotations

import time

from core.automaton import Tgba, is_empty, is_universal_syntactic, stats, trim
from core.given.basic import relax_automaton, restrict_automaton
from core.given.bounds import BoundedTgba, bounds_simplify, update_bounds_given
from core.given.context import StrategyContext, StrategyOptions
from core.given.knowledge import KnowledgeBase
from core.given.registry import StrategyRegistry, strategy
from core.given.relaxation import si_relax, si_restrict
from core.given.report import Outcome, StrategyReport
from core.ltl import Formula, negate
from core.translate import simplify, translate
from core.utils.exceptions import (
    ComplementCapExceededError,
    InvariantViolationError,
    ResourceError,
    TimeoutExceededError,
)
from core.utils.logging import LogContext, get_logger

logger = get_logger(__name__)

ROSTER = (
    "raw",
    "p.min",
    "p.max",
    "p.min∃",
    "p.max∃",
    "p.BM",
    "BM",
    "p.SIrelax",
    "p.SIrestrict",
    "SIrelax",
    "SIrestrict",
)


# ----------------------------------------------------------------------
# Stages
# ----------------------------------------------------------------------


@strategy(name="raw", description="Translation of ¬φ, simplified; no knowledge", kind="basic")
def raw_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return a


@strategy(name="p.min", description="Restrict by the conjunction of facts", kind="basic", precise=True)
def min_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return restrict_automaton(a, ctx.kb.conjunction.formula, use_qe=False)


@strategy(name="p.max", description="Relax by the conjunction of facts", kind="basic", precise=True)
def max_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return relax_automaton(a, ctx.kb.conjunction.formula, use_qe=False)


@strategy(
    name="p.min∃",
    description="Restrict by facts projected on the atoms of φ",
    kind="basic",
    precise=True,
    aliases=["p.minE"],
)
def min_qe_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return restrict_automaton(a, ctx.kb.conjunction.formula, use_qe=True)


@strategy(
    name="p.max∃",
    description="Relax by facts projected on the atoms of φ",
    kind="basic",
    precise=True,
    aliases=["p.maxE"],
)
def max_qe_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return relax_automaton(a, ctx.kb.conjunction.formula, use_qe=True)


def _bounds(a: Tgba, kb: KnowledgeBase) -> Tgba:
    b = BoundedTgba.of(a)
    for fact in kb:
        b = update_bounds_given(b, fact.automaton)
    return bounds_simplify(b)


@strategy(name="p.BM", description="Boolean bounds from the conjunction of facts", kind="bounds", precise=True)
def bounds_precise_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return _bounds(a, ctx.kb.single())


@strategy(name="BM", description="Boolean bounds, fact by fact", kind="bounds")
def bounds_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return _bounds(a, ctx.kb)


@strategy(name="p.SIrelax", description="Stutter closure if the conjunction excludes added words", kind="stutter", precise=True)
def si_relax_precise_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return si_relax(a, ctx.negation(a), ctx.kb.single())


@strategy(name="SIrelax", description="Stutter closure if one fact excludes added words", kind="stutter")
def si_relax_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return si_relax(a, ctx.negation(a), ctx.kb)


@strategy(
    name="p.SIrestrict",
    description="Drop the stutter-sensitive part if the conjunction excludes it",
    kind="stutter",
    precise=True,
)
def si_restrict_precise_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return si_restrict(a, ctx.negation(a), ctx.kb.single(), ctx.options.complement_cap, ctx.flags)


@strategy(name="SIrestrict", description="Drop the stutter-sensitive part if one fact excludes it", kind="stutter")
def si_restrict_stage(ctx: StrategyContext, a: Tgba) -> Tgba:
    return si_restrict(a, ctx.negation(a), ctx.kb, ctx.options.complement_cap, ctx.flags)


# ----------------------------------------------------------------------
# Driver
# ----------------------------------------------------------------------


def _cap_flag(exc: ResourceError) -> str:
    if isinstance(exc, ComplementCapExceededError):
        return "complement-cap"
    operation = exc.details.get("operation")
    return f"{operation}-cap" if operation else f"{exc.category}-cap"


def raw_automaton(phi: Formula, manager=None) -> Tgba:
    """Simplified automaton of ``¬φ`` carrying ``¬φ`` as its formula."""
    return simplify(translate(negate(phi), manager))


def run_strategy(
    name: str,
    phi: Formula,
    kb: KnowledgeBase,
    opts: StrategyOptions | None = None,
) -> tuple[Tgba, StrategyReport]:
    """Run strategy ``name`` on property ``φ`` with knowledge ``kb``.

    Facts not sharing an atom with ``φ`` are ignored. A stage that hits a
    resource cap leaves its input unchanged and records a flag; timeouts
    propagate.

    Raises:
        UnknownStrategyError: If ``name`` (or a part of it) is not registered.
        InvariantViolationError: If the result is both empty and universal.
    """
    options = opts or StrategyOptions()
    stages = StrategyRegistry.resolve(name)
    relevant = kb.relevant_to(phi)
    ctx = StrategyContext(phi, relevant, kb.manager, options)
    if kb.skipped:
        ctx.flag("fact-skipped")

    start = time.perf_counter()
    with LogContext(strategy=name):
        raw = raw_automaton(phi, kb.manager)
        result = raw
        for stage in stages:
            try:
                result = stage.function(ctx, result)
            except TimeoutExceededError:
                raise
            except ResourceError as exc:
                logger.info("strategy.stage_degraded", stage=stage.name, reason=exc.message)
                ctx.flag(_cap_flag(exc))

        empty = is_empty(result)
        universal = is_universal_syntactic(result)
        if empty and universal:
            raise InvariantViolationError("strategy result is both empty and universal", details={"strategy": name})
        if empty:
            result = trim(result)
        elapsed = (time.perf_counter() - start) * 1000.0

        before = stats(raw, complement_cap=options.stats_si_cap)
        after = stats(result, complement_cap=options.stats_si_cap)
        if empty:
            outcome = Outcome.EMPTY
        elif universal:
            outcome = Outcome.UNIVERSAL
        elif after.same_shape(before):
            outcome = Outcome.UNCHANGED
        else:
            outcome = Outcome.SIMPLIFIED
        logger.debug("strategy.done", outcome=outcome.value, states=after.states, time_ms=round(elapsed, 3))
    report = StrategyReport(
        strategy=name,
        outcome=outcome,
        before=before,
        after=after,
        time_ms=elapsed,
        flags=list(ctx.flags),
    )
    return result, report
