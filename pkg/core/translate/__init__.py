"""LTL to TGBA translation and language-preserving postprocessing."""

from core.translate.postprocess import (
    bisimulation_quotient,
    direct_simulation,
    minimize_marks,
    prune_little_brothers,
    simplify,
)
from core.translate.tableau import eventualities, translate

__all__ = [
    "bisimulation_quotient",
    "direct_simulation",
    "eventualities",
    "minimize_marks",
    "prune_little_brothers",
    "simplify",
    "translate",
]
