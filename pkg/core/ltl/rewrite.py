"""
Formula rewriting: negation normal form, a light simplifier, and syntactic
existential quantification of atoms.
"""

from collections.abc import Iterable

from core.boolfn import BddManager
from core.ltl.boolean import from_bdd, is_boolean, to_bdd
from core.ltl.formula import (
    FALSE,
    TRUE,
    F,
    Formula,
    G,
    Not,
    Op,
    X,
    And,
    Equiv,
    Implies,
    Or,
    R,
    U,
    atoms,
    atoms_in_order,
)


def nnf(f: Formula, negated: bool = False) -> Formula:
    """Push negations down to atoms; ``->`` and ``<->`` are expanded."""
    match f.op:
        case Op.TRUE | Op.FALSE:
            return (FALSE if f.op is Op.TRUE else TRUE) if negated else f
        case Op.ATOM:
            return Not(f) if negated else f
        case Op.NOT:
            return nnf(f.args[0], not negated)
        case Op.AND:
            parts = [nnf(a, negated) for a in f.args]
            return Or(*parts) if negated else And(*parts)
        case Op.OR:
            parts = [nnf(a, negated) for a in f.args]
            return And(*parts) if negated else Or(*parts)
        case Op.IMPLIES:
            a, b = f.args
            if negated:
                return And(nnf(a), nnf(b, True))
            return Or(nnf(a, True), nnf(b))
        case Op.EQUIV:
            a, b = f.args
            if negated:
                return Or(And(nnf(a), nnf(b, True)), And(nnf(a, True), nnf(b)))
            return Or(And(nnf(a), nnf(b)), And(nnf(a, True), nnf(b, True)))
        case Op.NEXT:
            return X(nnf(f.args[0], negated))
        case Op.EVENTUALLY:
            inner = nnf(f.args[0], negated)
            return G(inner) if negated else F(inner)
        case Op.ALWAYS:
            inner = nnf(f.args[0], negated)
            return F(inner) if negated else G(inner)
        case Op.UNTIL:
            a, b = (nnf(g, negated) for g in f.args)
            return R(a, b) if negated else U(a, b)
        case Op.RELEASE:
            a, b = (nnf(g, negated) for g in f.args)
            return U(a, b) if negated else R(a, b)
    raise ValueError(f"unsupported operator {f.op!r}")


def negate(f: Formula) -> Formula:
    """Negation of ``f`` in negation normal form."""
    return nnf(Not(f))


def _complementary(f: Formula, g: Formula) -> bool:
    return (f.op is Op.NOT and f.args[0] == g) or (g.op is Op.NOT and g.args[0] == f)


def _fold_junction(op: Op, parts: Iterable[Formula]) -> Formula:
    absorbing, neutral = (FALSE, TRUE) if op is Op.AND else (TRUE, FALSE)
    kept: list[Formula] = []
    for p in parts:
        if p == neutral:
            continue
        if p == absorbing:
            return absorbing
        for q in p.args if p.op is op else (p,):
            if q in kept:
                continue
            if any(_complementary(q, k) for k in kept):
                return absorbing
            kept.append(q)
    return And(*kept) if op is Op.AND else Or(*kept)


def simplify_light(f: Formula) -> Formula:
    """Constant folding, double negation, duplicate and complementary literals.

    Temporal rewrites are limited to constant cases plus ``F F`` and ``G G``.
    """
    args = tuple(simplify_light(a) for a in f.args)
    match f.op:
        case Op.TRUE | Op.FALSE | Op.ATOM:
            return f
        case Op.NOT:
            (a,) = args
            if a.op is Op.TRUE:
                return FALSE
            if a.op is Op.FALSE:
                return TRUE
            if a.op is Op.NOT:
                return a.args[0]
            return Not(a)
        case Op.AND | Op.OR:
            return _fold_junction(f.op, args)
        case Op.IMPLIES:
            a, b = args
            if a.op is Op.FALSE or b.op is Op.TRUE:
                return TRUE
            if a.op is Op.TRUE:
                return b
            if b.op is Op.FALSE:
                return simplify_light(Not(a))
            return Implies(a, b)
        case Op.EQUIV:
            a, b = args
            if a == b:
                return TRUE
            if a.op is Op.TRUE:
                return b
            if b.op is Op.TRUE:
                return a
            return Equiv(a, b)
        case Op.NEXT:
            (a,) = args
            return a if a.is_constant else X(a)
        case Op.EVENTUALLY:
            (a,) = args
            if a.is_constant or a.op is Op.EVENTUALLY:
                return a
            return F(a)
        case Op.ALWAYS:
            (a,) = args
            if a.is_constant or a.op is Op.ALWAYS:
                return a
            return G(a)
        case Op.UNTIL:
            a, b = args
            if b.is_constant or a.op is Op.FALSE:
                return b
            if a.op is Op.TRUE:
                return F(b)
            return U(a, b)
        case Op.RELEASE:
            a, b = args
            if b.is_constant or a.op is Op.TRUE:
                return b
            if a.op is Op.FALSE:
                return G(b)
            return R(a, b)
    raise ValueError(f"unsupported operator {f.op!r}")


def qe_syntactic(quantified: Iterable[str], k: Formula) -> Formula:
    """Over-approximate ``∃P. K`` by quantifying each maximal Boolean subformula.

    ``K`` is put in negation normal form first so that every Boolean
    subformula occurs positively. Boolean operands of an n-ary ``&``/``|``
    are quantified together as one subformula.

    Example:
        >>> str(qe_syntactic({"a"}, parse("X(a & b) & X(!a & b)")))
        'X b'
    """
    names = frozenset(quantified) & atoms(k)
    if not names:
        return k
    manager = BddManager()
    manager.declare_all(atoms_in_order(k))
    qvars = [manager.var_index(n) for n in names]

    def project(g: Formula) -> Formula:
        return from_bdd(manager.exists(to_bdd(g, manager), qvars))

    def rec(g: Formula) -> Formula:
        if is_boolean(g):
            return project(g)
        if g.op in (Op.AND, Op.OR):
            boolean = [a for a in g.args if is_boolean(a)]
            temporal = [rec(a) for a in g.args if not is_boolean(a)]
            build = And if g.op is Op.AND else Or
            grouped = [project(build(*boolean))] if boolean else []
            return build(*grouped, *temporal)
        return Formula(g.op, tuple(rec(a) for a in g.args), g.name)

    return simplify_light(rec(nnf(k)))
