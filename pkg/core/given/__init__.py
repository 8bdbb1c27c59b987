"""
Knowledge integration ("given that ...") strategies.

Importing this package registers the strategy roster.
"""

from core.given.basic import (
    project_knowledge,
    relax_automaton,
    restrict_automaton,
    strategy_max,
    strategy_min,
)
from core.given.bounds import (
    BoundedTgba,
    Guarantees,
    bounds_simplify,
    compute_guarantees,
    quantify_knowledge,
    update_bounds_given,
)
from core.given.context import StrategyContext, StrategyOptions
from core.given.knowledge import KnowledgeBase, KnowledgeFact, fact_automaton
from core.given.registry import StrategyMetadata, StrategyRegistry, strategy
from core.given.relaxation import si_relax, si_restrict
from core.given.report import Outcome, StrategyReport
from core.given.strategies import ROSTER, raw_automaton, run_strategy

__all__ = [
    "ROSTER",
    "BoundedTgba",
    "Guarantees",
    "KnowledgeBase",
    "KnowledgeFact",
    "Outcome",
    "StrategyContext",
    "StrategyMetadata",
    "StrategyOptions",
    "StrategyRegistry",
    "StrategyReport",
    "bounds_simplify",
    "compute_guarantees",
    "fact_automaton",
    "project_knowledge",
    "quantify_knowledge",
    "raw_automaton",
    "relax_automaton",
    "restrict_automaton",
    "run_strategy",
    "si_relax",
    "si_restrict",
    "strategy",
    "strategy_max",
    "strategy_min",
    "update_bounds_given",
]
