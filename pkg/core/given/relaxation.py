"""
Stutter-based knowledge integration.

``si_relax`` replaces an automaton by its stutter-insensitive closure when
some fact excludes every added word. ``si_restrict`` removes the
stutter-sensitive part when some fact excludes every removed word. Each
check is a product emptiness test; complements of the closure products are
only built after the emptiness premise holds.
"""

from __future__ import annotations

from core.automaton import Tgba, is_empty, product
from core.complement import complement_generic
from core.given.knowledge import KnowledgeBase
from core.stutter import si_closure, ss_part
from core.translate import simplify
from core.utils.exceptions import ResourceError, TimeoutExceededError
from core.utils.logging import get_logger

logger = get_logger(__name__)


def si_relax(a: Tgba, a_neg: Tgba, kb: KnowledgeBase) -> Tgba:
    """``si(a)`` if some fact ``K`` makes ``si(a) ⊗ ā ⊗ K`` empty, else ``a``.

    ``si(a) ⊗ ā`` is computed once for all facts. When it is already empty,
    ``a`` is stutter-insensitive and is returned as is.
    """
    if not kb:
        return a
    closed = si_closure(a)
    added = product(closed, a_neg)
    if is_empty(added):
        return a
    for fact in kb:
        if is_empty(product(added, fact.automaton)):
            logger.debug("si_relax.applied", fact=str(fact))
            return closed
    return a


def si_restrict(
    a: Tgba,
    a_neg: Tgba,
    kb: KnowledgeBase,
    cap: int | None = None,
    flags: list[str] | None = None,
) -> Tgba:
    """``a ⊗ complement(ss(a))`` if some fact ``K`` makes ``ss(a) ⊗ K`` empty, else ``a``.

    Cap hits anywhere degrade to returning ``a``; a ``complement-cap`` flag is
    appended to ``flags`` when given.
    """
    if not kb:
        return a
    try:
        ss = ss_part(a, a_neg)
        if is_empty(ss):
            return a
        for fact in kb:
            if is_empty(product(ss, fact.automaton)):
                logger.debug("si_restrict.applied", fact=str(fact))
                return simplify(product(a, complement_generic(ss, cap)))
        return a
    except TimeoutExceededError:
        raise
    except ResourceError as exc:
        logger.info("si_restrict.degraded", reason=exc.message)
        if flags is not None:
            flags.append("complement-cap")
        return a
