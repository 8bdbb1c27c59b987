"""Complementation of TGBAs: cheap via formulas, generic via level rankings."""

from core.complement.degeneralize import degeneralize
from core.complement.formula import complement_of, complement_via_formula
from core.complement.ranking import MAX_LETTER_ATOMS, complement_generic

__all__ = [
    "MAX_LETTER_ATOMS",
    "complement_generic",
    "complement_of",
    "complement_via_formula",
    "degeneralize",
]
