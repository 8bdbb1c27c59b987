"""Complementation through the negated formula."""

from core.automaton import Tgba
from core.boolfn import BddManager
from core.ltl import Formula, negate
from core.translate import simplify, translate


def complement_via_formula(f: Formula, manager: BddManager | None = None) -> Tgba:
    """Simplified automaton of ``¬f``; the negated formula is attached."""
    return simplify(translate(negate(f), manager))


def complement_of(a: Tgba, cap: int | None = None) -> Tgba:
    """Complement of ``a``: through its formula when known, else generic."""
    if a.formula is not None:
        return complement_via_formula(a.formula, a.manager)
    from core.complement.ranking import complement_generic

    return complement_generic(a, cap)
