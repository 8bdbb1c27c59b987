"""LTL formulas: syntax, parsing, rewriting and lasso semantics."""

from core.ltl.boolean import from_bdd, from_sop, is_boolean, to_bdd
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
    atom,
    atoms,
    atoms_in_order,
    constant,
    iter_subformulas,
    size,
    to_text,
)
from core.ltl.parser import parse
from core.ltl.rewrite import negate, nnf, qe_syntactic, simplify_light
from core.ltl.semantics import holds_on_lasso

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Equiv",
    "F",
    "Formula",
    "G",
    "Implies",
    "Not",
    "Op",
    "Or",
    "R",
    "U",
    "X",
    "atom",
    "atoms",
    "atoms_in_order",
    "constant",
    "from_bdd",
    "from_sop",
    "holds_on_lasso",
    "is_boolean",
    "iter_subformulas",
    "negate",
    "nnf",
    "parse",
    "qe_syntactic",
    "simplify_light",
    "size",
    "to_bdd",
    "to_text",
]
