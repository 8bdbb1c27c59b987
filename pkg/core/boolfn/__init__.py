"""Boolean functions: a BDD engine and irredundant sum-of-products covers."""

from core.boolfn.bdd import Bdd, BddManager, BoolOp, VarId
from core.boolfn.isop import (
    FALSE_SOP,
    TRUE_SOP,
    SumOfProducts,
    format_sop,
    isop,
    isop_bdd,
    label_size,
    sop_size,
    sop_to_bdd,
)

__all__ = [
    "FALSE_SOP",
    "TRUE_SOP",
    "Bdd",
    "BddManager",
    "BoolOp",
    "SumOfProducts",
    "VarId",
    "format_sop",
    "isop",
    "isop_bdd",
    "label_size",
    "sop_size",
    "sop_to_bdd",
]
