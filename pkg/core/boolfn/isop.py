"""
Irredundant sum-of-products covers of Boolean intervals.

Minato-Morreale recursion over BDD intervals ``[f_low, f_high]``: at each
step the lowest-index variable of either bound is split on, the parts that
must mention the literal are covered first, and the remainder is covered
without it. The cover is irredundant and every product is prime inside the
interval.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from core.boolfn.bdd import FALSE_NODE, TRUE_NODE, Bdd, BddManager, VarId
from core.utils.exceptions import ExceptionFactory

Literal = tuple[VarId, bool]
Product = tuple[Literal, ...]


@dataclass(frozen=True)
class SumOfProducts:
    """A disjunction of conjunctions of signed literals.

    ``()`` is ⊥ and ``((),)`` is ⊤. Literals inside a product are sorted by
    variable.
    """

    products: tuple[Product, ...] = ()

    @classmethod
    def of(cls, products: Iterable[Iterable[Literal]]) -> SumOfProducts:
        return cls(tuple(tuple(sorted(p)) for p in products))

    @property
    def is_false(self) -> bool:
        return not self.products

    @property
    def is_true(self) -> bool:
        return any(not p for p in self.products)

    def __len__(self) -> int:
        return len(self.products)

    def __iter__(self):
        return iter(self.products)


FALSE_SOP = SumOfProducts(())
TRUE_SOP = SumOfProducts(((),))


def isop(f_low: Bdd, f_high: Bdd) -> SumOfProducts:
    """Irredundant cover ``f'`` with ``f_low ⇒ f' ⇒ f_high``.

    Args:
        f_low: Lower bound
        f_high: Upper bound (same manager)

    Returns:
        The cover; ``⊥`` whenever ``f_low`` is ⊥ and ``⊤`` whenever ``f_high`` is ⊤.

    Raises:
        InvalidIntervalError: If ``f_low`` does not imply ``f_high``.

    Example:
        >>> mgr = BddManager()
        >>> a, c = mgr.var("a"), mgr.var("c")
        >>> format_sop(isop(a & c, a | ~c), mgr.var_names)
        'a'
    """
    mgr = f_low.manager
    if not mgr.implies_check(f_low, f_high):
        raise ExceptionFactory.invalid_interval()
    cover, _ = isop_nodes(mgr, f_low.node, f_high.node)
    return SumOfProducts(tuple(tuple(sorted(p)) for p in cover))


def isop_bdd(f_low: Bdd, f_high: Bdd) -> Bdd:
    """The function of :func:`isop`'s cover, without materializing products."""
    mgr = f_low.manager
    if not mgr.implies_check(f_low, f_high):
        raise ExceptionFactory.invalid_interval()
    _, node = isop_nodes(mgr, f_low.node, f_high.node)
    return Bdd(mgr, node)


def isop_nodes(mgr: BddManager, low: int, high: int) -> tuple[tuple[Product, ...], int]:
    if low == FALSE_NODE:
        return (), FALSE_NODE
    if high == TRUE_NODE:
        return ((),), TRUE_NODE
    key = (low, high)
    hit = mgr.isop_cache.get(key)
    if hit is not None:
        return hit  # type: ignore[return-value]

    x = min(mgr.top_var(low), mgr.top_var(high))
    l0, l1 = mgr.cofactors(low, x)
    h0, h1 = mgr.cofactors(high, x)

    ite = mgr._ite
    c0, f0 = isop_nodes(mgr, ite(l0, mgr._not(h1), FALSE_NODE), h0)
    c1, f1 = isop_nodes(mgr, ite(l1, mgr._not(h0), FALSE_NODE), h1)
    rest_low = ite(
        ite(l0, mgr._not(f0), FALSE_NODE),
        TRUE_NODE,
        ite(l1, mgr._not(f1), FALSE_NODE),
    )
    rest_high = ite(h0, h1, FALSE_NODE)
    cs, fs = isop_nodes(mgr, rest_low, rest_high)

    cover = (
        tuple(p + ((x, False),) for p in c0)
        + tuple(p + ((x, True),) for p in c1)
        + cs
    )
    node = ite(mgr.make_node(x, f0, f1), TRUE_NODE, fs)
    result = (cover, node)
    mgr.isop_cache[key] = result
    return result


def sop_to_bdd(s: SumOfProducts, manager: BddManager) -> Bdd:
    return manager.disjoin(manager.cube(dict(p)) for p in s.products)


def sop_size(s: SumOfProducts) -> int:
    """Total number of literal occurrences (⊤ and ⊥ both have size 0)."""
    return sum(len(p) for p in s.products)


def label_size(f: Bdd) -> int:
    """Size of the exact irredundant cover of ``f``."""
    return sop_size(isop(f, f))


def format_sop(s: SumOfProducts, names: Sequence[str]) -> str:
    """Render as ``a & !b | c``; ``1`` and ``0`` for the constants."""
    if s.is_false:
        return "0"
    if s.is_true:
        return "1"
    terms = []
    for p in s.products:
        terms.append(" & ".join(names[v] if pos else f"!{names[v]}" for v, pos in p))
    return " | ".join(terms)
