"""Explicit systems: Kripke structures, knowledge seekers and the final emptiness check."""

from core.sysmc.check import Verdict, VerdictStatus, check, system_automaton
from core.sysmc.kripke import Kripke
from core.sysmc.pipeline import model_check
from core.sysmc.seekers import (
    Fact,
    FactKind,
    canonical,
    seek_all,
    seek_convergent,
    seek_first_steps,
    seek_initial,
    seek_invariants,
)


def load_system(path) -> Kripke:
    """Read a KTS file."""
    from core.io.kts import read_kts

    return read_kts(path)


__all__ = [
    "Fact",
    "FactKind",
    "Kripke",
    "Verdict",
    "VerdictStatus",
    "canonical",
    "check",
    "load_system",
    "model_check",
    "seek_all",
    "seek_convergent",
    "seek_first_steps",
    "seek_initial",
    "seek_invariants",
    "system_automaton",
]
