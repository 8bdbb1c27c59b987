"""Emptiness check of a system against a negated-property automaton."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from core.automaton import LassoWord, Tgba, TgbaBuilder, find_accepting_lasso, product_with_origins
from core.boolfn import BddManager
from core.sysmc.kripke import Kripke
from core.utils.exceptions import AlphabetMismatchError, ResourceError, TimeoutExceededError
from core.utils.logging import get_logger

logger = get_logger(__name__)


class VerdictStatus(StrEnum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Result of ``check``.

    ``counterexample`` and ``path`` are set only when the property fails;
    ``path`` lists system states, the cycle starting at ``loop_start``.
    """

    status: VerdictStatus
    counterexample: LassoWord | None = None
    path: tuple[int, ...] = ()
    loop_start: int = 0
    reason: str | None = None

    @property
    def holds(self) -> bool:
        return self.status is VerdictStatus.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is VerdictStatus.FAILS

    def __str__(self) -> str:
        if self.counterexample is not None:
            return f"{self.status.value}: {self.counterexample}"
        if self.reason:
            return f"{self.status.value} ({self.reason})"
        return self.status.value


def system_automaton(s: Kripke, manager: BddManager) -> Tgba:
    """0-mark automaton of ``s``: each edge reads its source valuation."""
    builder = TgbaBuilder(manager, s.ap, 0)
    builder.add_states(s.num_states)
    cubes = [manager.cube({manager.var_index(x): x in val for x in s.ap}) for val in s.valuations]
    for q in s.reachable:
        for dst in s.successors[q]:
            builder.add(q, cubes[q], 0, dst)
    return builder.build(s.initial)


def check(s: Kripke, b: Tgba) -> Verdict:
    """Decide whether every run of ``s`` avoids ``L(b)``.

    Raises:
        AlphabetMismatchError: If ``b`` reads atoms unknown to ``s``.
        TimeoutExceededError: If the active deadline expires.
    """
    missing = sorted(set(b.ap) - set(s.ap))
    if missing:
        raise AlphabetMismatchError("automaton reads atoms the system does not define", details={"atoms": missing})
    try:
        result = product_with_origins(system_automaton(s, b.manager), b)
        lasso = find_accepting_lasso(result.automaton)
    except TimeoutExceededError:
        raise
    except ResourceError as exc:
        logger.warning("check.unknown", reason=exc.message)
        return Verdict(VerdictStatus.UNKNOWN, reason=exc.message)

    if lasso is None:
        logger.debug("check.holds", product_states=result.automaton.num_states)
        return Verdict(VerdictStatus.HOLDS)
    prefix, cycle = lasso
    path = tuple(result.states[t.src][0] for t in (*prefix, *cycle))
    word = LassoWord(
        s.ap,
        tuple(s.valuations[q] for q in path[: len(prefix)]),
        tuple(s.valuations[q] for q in path[len(prefix) :]),
    )
    logger.debug("check.fails", prefix=len(prefix), cycle=len(cycle))
    return Verdict(VerdictStatus.FAILS, word, path, len(prefix))
