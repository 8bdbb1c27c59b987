"""Size and shape metrics of automata, as reported per strategy and bench row."""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from core.automaton.checks import Strength, is_deterministic, strength
from core.automaton.tgba import Tgba
from core.boolfn import label_size
from core.utils.exceptions import ResourceError, TimeoutExceededError
from core.utils.logging import get_logger

logger = get_logger(__name__)


class SiStatus(StrEnum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class AutomatonStats(BaseModel):
    """Size and shape of one automaton."""

    model_config = ConfigDict(frozen=True)

    states: int = Field(..., ge=0, description="Number of states")
    transitions: int = Field(..., ge=0, description="Number of transitions")
    ap_count: int = Field(..., ge=0, description="Size of the atom alphabet")
    label_size_total: int = Field(..., ge=0, description="Sum of literal counts of label covers")
    is_si: SiStatus = Field(default=SiStatus.UNKNOWN, description="Stutter-insensitivity")
    is_det: bool = Field(..., description="Pairwise-disjoint outgoing labels")
    strength: Strength = Field(..., description="terminal, weak or general")

    def same_shape(self, other: AutomatonStats) -> bool:
        """Equal size figures; SI status is not compared."""
        return (self.states, self.transitions, self.ap_count, self.label_size_total) == (
            other.states,
            other.transitions,
            other.ap_count,
            other.label_size_total,
        )


def _si_status(a: Tgba, neg: Tgba | None, complement_cap: int | None) -> SiStatus:
    from core.complement import complement_generic, complement_via_formula
    from core.stutter import is_stutter_insensitive

    if a.stutter_insensitive is not None:
        return SiStatus.YES if a.stutter_insensitive else SiStatus.NO
    try:
        if neg is None:
            if a.formula is not None:
                neg = complement_via_formula(a.formula, a.manager)
            elif complement_cap is not None:
                neg = complement_generic(a, complement_cap)
            else:
                return SiStatus.UNKNOWN
        return SiStatus.YES if is_stutter_insensitive(a, neg) else SiStatus.NO
    except TimeoutExceededError:
        raise
    except ResourceError as exc:
        logger.info("stats.si_unknown", reason=exc.message)
        return SiStatus.UNKNOWN


def stats(a: Tgba, neg: Tgba | None = None, complement_cap: int | None = None) -> AutomatonStats:
    """Compute :class:`AutomatonStats` for ``a``.

    SI is read from the property bit of ``a`` when set. Otherwise it uses
    ``neg`` when given, else the negation of ``a.formula`` when known, else a
    generic complement bounded by ``complement_cap`` when one is given.
    Anything else, or a cap hit, yields ``unknown``.
    """
    return AutomatonStats(
        states=a.num_states,
        transitions=a.num_transitions,
        ap_count=len(a.ap),
        label_size_total=sum(label_size(t.label) for t in a.transitions),
        is_si=_si_status(a, neg, complement_cap),
        is_det=is_deterministic(a),
        strength=strength(a),
    )
