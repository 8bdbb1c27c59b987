"""TGBA value type, algebra, SCC analyses, lasso membership and metrics."""

from core.automaton.algebra import (
    ProductResult,
    merge_parallel,
    product,
    product_with_origins,
    relabel,
    tgba_sum,
    with_all_marks,
)
from core.automaton.checks import Strength, is_deterministic, is_universal_syntactic, strength
from core.automaton.lasso import LassoWord, accepts_lasso
from core.automaton.metrics import AutomatonStats, SiStatus, stats
from core.automaton.scc import (
    SccInfo,
    find_accepting_lasso,
    is_empty,
    scc_info,
    trim,
    trim_with_map,
    useful_transitions,
)
from core.automaton.tgba import (
    MAX_MARKS,
    Tgba,
    TgbaBuilder,
    Transition,
    check_mark_count,
    full_mask,
    marks_of,
    mask_of,
    renumber,
)

__all__ = [
    "MAX_MARKS",
    "AutomatonStats",
    "LassoWord",
    "ProductResult",
    "SccInfo",
    "SiStatus",
    "Strength",
    "Tgba",
    "TgbaBuilder",
    "Transition",
    "accepts_lasso",
    "check_mark_count",
    "find_accepting_lasso",
    "full_mask",
    "is_deterministic",
    "is_empty",
    "is_universal_syntactic",
    "mask_of",
    "marks_of",
    "merge_parallel",
    "product",
    "product_with_origins",
    "relabel",
    "renumber",
    "scc_info",
    "stats",
    "strength",
    "tgba_sum",
    "trim",
    "trim_with_map",
    "useful_transitions",
    "with_all_marks",
]
