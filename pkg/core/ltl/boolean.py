"""Conversions between temporal-free formulas and BDDs."""

from core.boolfn import Bdd, BddManager, SumOfProducts, isop
from core.ltl.formula import FALSE, TRUE, Formula, Op, And, Not, Or, atom, iter_subformulas


def is_boolean(f: Formula) -> bool:
    """True iff ``f`` contains no temporal operator."""
    return not any(g.is_temporal for g in iter_subformulas(f))


def to_bdd(f: Formula, manager: BddManager) -> Bdd:
    """Build the BDD of a temporal-free formula, declaring its atoms as needed.

    Raises:
        ValueError: If ``f`` contains a temporal operator.
    """
    match f.op:
        case Op.TRUE:
            return manager.true
        case Op.FALSE:
            return manager.false
        case Op.ATOM:
            return manager.var(f.name or "")
        case Op.NOT:
            return ~to_bdd(f.args[0], manager)
        case Op.AND:
            return manager.conjoin(to_bdd(a, manager) for a in f.args)
        case Op.OR:
            return manager.disjoin(to_bdd(a, manager) for a in f.args)
        case Op.IMPLIES:
            return ~to_bdd(f.args[0], manager) | to_bdd(f.args[1], manager)
        case Op.EQUIV:
            return ~(to_bdd(f.args[0], manager) ^ to_bdd(f.args[1], manager))
    raise ValueError(f"not a Boolean formula: {f}")


def from_sop(cover: SumOfProducts, names: tuple[str, ...]) -> Formula:
    if cover.is_false:
        return FALSE
    if cover.is_true:
        return TRUE
    terms = [And(*(atom(names[v]) if pos else Not(atom(names[v])) for v, pos in p)) for p in cover]
    return Or(*terms)


def from_bdd(f: Bdd) -> Formula:
    """Formula of the irredundant cover of ``f``."""
    return from_sop(isop(f, f), f.manager.var_names)
