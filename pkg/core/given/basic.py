"""
Basic knowledge integration by restriction (min) and relaxation (max).

Both work on formulas when the negated property is known: restricting
gives ``¬φ ∧ K`` and relaxing gives ``¬φ ∨ ¬K``. With quantification, ``K``
is first replaced by its syntactic projection on the atoms of ``φ``.
Without a formula, they fall back to the automaton product and sum.
"""

from __future__ import annotations

from core.automaton import Tgba, is_empty, product, tgba_sum
from core.boolfn import BddManager
from core.complement import complement_via_formula
from core.ltl import And, Formula, Not, Or, atoms, negate, nnf, qe_syntactic
from core.translate import simplify, translate
from core.utils.logging import get_logger

logger = get_logger(__name__)


def project_knowledge(k: Formula, target: Formula) -> Formula:
    """``QE(P, K)`` with ``P`` the atoms of ``k`` absent from ``target``."""
    return qe_syntactic(atoms(k) - atoms(target), k)


def restrict_formula(neg: Formula, k: Formula, use_qe: bool, manager: BddManager | None = None) -> Tgba:
    """Automaton of ``neg ∧ K`` (``K`` projected when ``use_qe``)."""
    kk = project_knowledge(k, neg) if use_qe else k
    return simplify(translate(And(neg, kk), manager))


def relax_formula(neg: Formula, k: Formula, use_qe: bool, manager: BddManager | None = None) -> Tgba:
    """Automaton of ``neg ∨ ¬K``; universal when ``¬neg ∧ K`` is unsatisfiable."""
    kk = project_knowledge(k, neg) if use_qe else k
    mgr = manager or BddManager()
    dual = simplify(translate(And(nnf(Not(neg)), kk), mgr))
    if is_empty(dual):
        logger.debug("given.max_universal", formula=str(neg))
        return Tgba.universal(mgr, dual.ap, Or(neg, negate(kk)))
    return simplify(translate(Or(neg, negate(kk)), mgr))


def strategy_min(phi: Formula, k: Formula, use_qe: bool = False, manager: BddManager | None = None) -> Tgba:
    """Restriction of ``A_¬φ`` by the knowledge ``K``."""
    return restrict_formula(negate(phi), k, use_qe, manager)


def strategy_max(phi: Formula, k: Formula, use_qe: bool = False, manager: BddManager | None = None) -> Tgba:
    """Relaxation of ``A_¬φ`` by the knowledge ``K``."""
    return relax_formula(negate(phi), k, use_qe, manager)


def restrict_automaton(a: Tgba, k: Formula, use_qe: bool) -> Tgba:
    """Restriction of any automaton; through its formula when known."""
    if a.formula is not None:
        return restrict_formula(a.formula, k, use_qe, a.manager)
    kk = qe_syntactic(atoms(k) - frozenset(a.ap), k) if use_qe else k
    return simplify(product(a, simplify(translate(kk, a.manager))))


def relax_automaton(a: Tgba, k: Formula, use_qe: bool) -> Tgba:
    """Relaxation of any automaton; through its formula when known."""
    if a.formula is not None:
        return relax_formula(a.formula, k, use_qe, a.manager)
    kk = qe_syntactic(atoms(k) - frozenset(a.ap), k) if use_qe else k
    return simplify(tgba_sum(a, complement_via_formula(kk, a.manager)))
