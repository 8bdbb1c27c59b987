"""Stutter-insensitive closure and stutter-sensitive part of TGBAs."""

from core.stutter.closure import (
    closure_shortcuts,
    closure_stutter_states,
    is_stutter_insensitive,
    si_closure,
    ss_part,
)

__all__ = [
    "closure_shortcuts",
    "closure_stutter_states",
    "is_stutter_insensitive",
    "si_closure",
    "ss_part",
]
