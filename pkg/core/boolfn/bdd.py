"""
Reduced ordered binary decision diagrams.

A :class:`BddManager` owns a unique table of ``(var, low, high)`` triples and
an ``ite`` cache; :class:`Bdd` is a thin handle pairing a node reference with
its manager. Variables are ordered by registration (the order atoms are first
seen). Node ``0`` is the constant false, node ``1`` the constant true.

Example:
    >>> mgr = BddManager()
    >>> a, b = mgr.var("a"), mgr.var("b")
    >>> f = a & ~b
    >>> mgr.sat_count(f)
    1
    >>> (f | (a & b)) == a
    True
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from enum import StrEnum
from typing import TypeAlias

from core.config import get_settings
from core.utils.budget import check_deadline
from core.utils.exceptions import (
    ExceptionFactory,
    ManagerMismatchError,
    UnknownVariableError,
)

VarId: TypeAlias = int

FALSE_NODE = 0
TRUE_NODE = 1
_TERMINAL_LEVEL = 1 << 30
_DEADLINE_EVERY = 4096


class BoolOp(StrEnum):
    AND = "and"
    OR = "or"
    XOR = "xor"
    IMPLIES = "implies"


class Bdd:
    """Handle on a node of a :class:`BddManager`.

    Two handles are equal iff they belong to the same manager and denote the
    same function (canonicity makes that a node comparison).
    """

    __slots__ = ("manager", "node")

    def __init__(self, manager: BddManager, node: int) -> None:
        self.manager = manager
        self.node = node

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bdd):
            return NotImplemented
        return self.manager is other.manager and self.node == other.node

    def __hash__(self) -> int:
        return hash((id(self.manager), self.node))

    def __repr__(self) -> str:
        return f"Bdd({self.manager.to_text(self)})"

    def __and__(self, other: Bdd) -> Bdd:
        return self.manager.apply(BoolOp.AND, self, other)

    def __or__(self, other: Bdd) -> Bdd:
        return self.manager.apply(BoolOp.OR, self, other)

    def __xor__(self, other: Bdd) -> Bdd:
        return self.manager.apply(BoolOp.XOR, self, other)

    def __invert__(self) -> Bdd:
        return self.manager.negate(self)

    @property
    def is_true(self) -> bool:
        return self.node == TRUE_NODE

    @property
    def is_false(self) -> bool:
        return self.node == FALSE_NODE

    def implies(self, other: Bdd) -> bool:
        return self.manager.implies_check(self, other)

    def intersects(self, other: Bdd) -> bool:
        return not (self & other).is_false


class BddManager:
    """Unique table, operation caches and variable registry.

    Args:
        node_cap: Maximum number of internal nodes; defaults to the
            ``bdd_node_cap`` setting.
    """

    def __init__(self, node_cap: int | None = None) -> None:
        self.node_cap = node_cap if node_cap is not None else get_settings().bdd_node_cap
        # node -> (level, low, high); terminals sit below every variable
        self._succ: list[tuple[int, int, int]] = [
            (_TERMINAL_LEVEL, FALSE_NODE, FALSE_NODE),
            (_TERMINAL_LEVEL, TRUE_NODE, TRUE_NODE),
        ]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._ite_cache: dict[tuple[int, int, int], int] = {}
        self._not_cache: dict[int, int] = {}
        self._names: list[str] = []
        self._index: dict[str, VarId] = {}
        self._var_nodes: list[int] = []
        self.isop_cache: dict[tuple[int, int], tuple[object, int]] = {}

    # ------------------------------------------------------------------
    # Variables
    # ------------------------------------------------------------------

    def declare(self, name: str) -> VarId:
        """Register ``name`` (idempotent) and return its VarId."""
        existing = self._index.get(name)
        if existing is not None:
            return existing
        v = len(self._names)
        self._names.append(name)
        self._index[name] = v
        self._var_nodes.append(self._find_or_add(v, FALSE_NODE, TRUE_NODE))
        return v

    def declare_all(self, names: Iterable[str]) -> list[VarId]:
        return [self.declare(n) for n in names]

    @property
    def var_names(self) -> tuple[str, ...]:
        return tuple(self._names)

    @property
    def num_vars(self) -> int:
        return len(self._names)

    def var_index(self, name: str) -> VarId:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError("Unknown atomic proposition", details={"name": name}) from None

    def var_name(self, v: VarId) -> str:
        self._check_var(v)
        return self._names[v]

    def _check_var(self, v: VarId) -> None:
        if not 0 <= v < len(self._names):
            raise UnknownVariableError("Unknown variable index", details={"var": v})

    def mk_var(self, v: VarId) -> Bdd:
        """The function "v is true"."""
        self._check_var(v)
        return Bdd(self, self._var_nodes[v])

    def var(self, name: str) -> Bdd:
        """Declare ``name`` if needed and return its positive literal."""
        return self.mk_var(self.declare(name))

    def literal(self, v: VarId, positive: bool) -> Bdd:
        lit = self.mk_var(v)
        return lit if positive else self.negate(lit)

    @property
    def true(self) -> Bdd:
        return Bdd(self, TRUE_NODE)

    @property
    def false(self) -> Bdd:
        return Bdd(self, FALSE_NODE)

    def constant(self, value: bool) -> Bdd:
        return self.true if value else self.false

    # ------------------------------------------------------------------
    # Core
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._succ)

    def node_parts(self, node: int) -> tuple[int, int, int]:
        """Return ``(level, low, high)``; terminals report a level above every variable."""
        return self._succ[node]

    def top_var(self, node: int) -> int:
        return self._succ[node][0]

    def cofactors(self, node: int, level: int) -> tuple[int, int]:
        """Negative and positive cofactor of ``node`` with respect to variable ``level``."""
        lv, lo, hi = self._succ[node]
        if lv == level:
            return lo, hi
        return node, node

    def make_node(self, level: int, low: int, high: int) -> int:
        return self._find_or_add(level, low, high)

    def _find_or_add(self, level: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (level, low, high)
        u = self._unique.get(key)
        if u is not None:
            return u
        u = len(self._succ)
        if u - 2 >= self.node_cap:
            raise ExceptionFactory.node_cap_exceeded(self.node_cap)
        if u % _DEADLINE_EVERY == 0:
            check_deadline("bdd")
        self._succ.append(key)
        self._unique[key] = u
        return u

    def _ite(self, g: int, u: int, v: int) -> int:
        if g == TRUE_NODE:
            return u
        if g == FALSE_NODE:
            return v
        if u == v:
            return u
        if u == TRUE_NODE and v == FALSE_NODE:
            return g
        key = (g, u, v)
        r = self._ite_cache.get(key)
        if r is not None:
            return r
        z = min(self._succ[g][0], self._succ[u][0], self._succ[v][0])
        g0, g1 = self.cofactors(g, z)
        u0, u1 = self.cofactors(u, z)
        v0, v1 = self.cofactors(v, z)
        r = self._find_or_add(z, self._ite(g0, u0, v0), self._ite(g1, u1, v1))
        self._ite_cache[key] = r
        return r

    def _not(self, u: int) -> int:
        if u <= TRUE_NODE:
            return 1 - u
        r = self._not_cache.get(u)
        if r is None:
            lv, lo, hi = self._succ[u]
            r = self._find_or_add(lv, self._not(lo), self._not(hi))
            self._not_cache[u] = r
        return r

    def _own(self, *fs: Bdd) -> None:
        for f in fs:
            if f.manager is not self:
                raise ManagerMismatchError("Bdd belongs to another manager")

    # ------------------------------------------------------------------
    # Operations
    # ------------------------------------------------------------------

    def apply(self, op: BoolOp, f: Bdd, g: Bdd) -> Bdd:
        """Combine two functions of this manager with a binary connective."""
        self._own(f, g)
        a, b = f.node, g.node
        if op is BoolOp.AND:
            r = self._ite(a, b, FALSE_NODE)
        elif op is BoolOp.OR:
            r = self._ite(a, TRUE_NODE, b)
        elif op is BoolOp.XOR:
            r = self._ite(a, self._not(b), b)
        elif op is BoolOp.IMPLIES:
            r = self._ite(a, b, TRUE_NODE)
        else:
            raise ValueError(f"unknown operator {op!r}")
        return Bdd(self, r)

    def negate(self, f: Bdd) -> Bdd:
        self._own(f)
        return Bdd(self, self._not(f.node))

    def ite(self, g: Bdd, f: Bdd, h: Bdd) -> Bdd:
        self._own(g, f, h)
        return Bdd(self, self._ite(g.node, f.node, h.node))

    def conjoin(self, fs: Iterable[Bdd]) -> Bdd:
        r = TRUE_NODE
        for f in fs:
            self._own(f)
            r = self._ite(r, f.node, FALSE_NODE)
            if r == FALSE_NODE:
                break
        return Bdd(self, r)

    def disjoin(self, fs: Iterable[Bdd]) -> Bdd:
        r = FALSE_NODE
        for f in fs:
            self._own(f)
            r = self._ite(r, TRUE_NODE, f.node)
            if r == TRUE_NODE:
                break
        return Bdd(self, r)

    def exists(self, f: Bdd, variables: Iterable[VarId]) -> Bdd:
        """Existential projection of ``f`` over ``variables``."""
        self._own(f)
        qvars = frozenset(variables)
        for v in qvars:
            self._check_var(v)
        if not qvars:
            return f
        cache: dict[int, int] = {}

        def rec(u: int) -> int:
            if u <= TRUE_NODE:
                return u
            r = cache.get(u)
            if r is not None:
                return r
            lv, lo, hi = self._succ[u]
            p, q = rec(lo), rec(hi)
            r = self._ite(p, TRUE_NODE, q) if lv in qvars else self._find_or_add(lv, p, q)
            cache[u] = r
            return r

        return Bdd(self, rec(f.node))

    def implies_check(self, f: Bdd, g: Bdd) -> bool:
        """True iff f ⇒ g."""
        self._own(f, g)
        return self._ite(f.node, g.node, TRUE_NODE) == TRUE_NODE

    def cofactor(self, f: Bdd, v: VarId, value: bool) -> Bdd:
        self._own(f)
        self._check_var(v)
        cache: dict[int, int] = {}

        def rec(u: int) -> int:
            lv, lo, hi = self._succ[u]
            if lv > v:
                return u
            r = cache.get(u)
            if r is None:
                r = (hi if value else lo) if lv == v else self._find_or_add(lv, rec(lo), rec(hi))
                cache[u] = r
            return r

        return Bdd(self, rec(f.node))

    def support(self, f: Bdd) -> frozenset[VarId]:
        self._own(f)
        seen: set[int] = set()
        out: set[int] = set()
        stack = [f.node]
        while stack:
            u = stack.pop()
            if u <= TRUE_NODE or u in seen:
                continue
            seen.add(u)
            lv, lo, hi = self._succ[u]
            out.add(lv)
            stack.extend((lo, hi))
        return frozenset(out)

    def sat_count(self, f: Bdd, nvars: int | None = None) -> int:
        """Number of satisfying valuations over the first ``nvars`` variables."""
        self._own(f)
        n = self.num_vars if nvars is None else nvars
        cache: dict[int, int] = {}

        def level(u: int) -> int:
            lv = self._succ[u][0]
            return n if lv == _TERMINAL_LEVEL else lv

        def rec(u: int) -> int:
            if u == FALSE_NODE:
                return 0
            if u == TRUE_NODE:
                return 1
            r = cache.get(u)
            if r is None:
                lv, lo, hi = self._succ[u]
                r = rec(lo) * 2 ** (level(lo) - lv - 1) + rec(hi) * 2 ** (level(hi) - lv - 1)
                cache[u] = r
            return r

        return rec(f.node) * 2 ** level(f.node)

    def evaluate(self, f: Bdd, valuation: Mapping[VarId, bool]) -> bool:
        """Evaluate ``f``; variables missing from ``valuation`` read as false."""
        self._own(f)
        u = f.node
        while u > TRUE_NODE:
            lv, lo, hi = self._succ[u]
            u = hi if valuation.get(lv, False) else lo
        return u == TRUE_NODE

    def evaluate_names(self, f: Bdd, true_atoms: Iterable[str]) -> bool:
        trues = {self._index[a] for a in true_atoms if a in self._index}
        return self.evaluate(f, {v: True for v in trues})

    def cube(self, literals: Mapping[VarId, bool]) -> Bdd:
        r = TRUE_NODE
        for v in sorted(literals, reverse=True):
            self._check_var(v)
            r = self._find_or_add(v, FALSE_NODE, r) if literals[v] else self._find_or_add(v, r, FALSE_NODE)
        return Bdd(self, r)

    def minterms(self, f: Bdd, variables: Iterable[VarId]) -> Iterator[dict[VarId, bool]]:
        """Enumerate total valuations over ``variables`` satisfying ``f``.

        ``f`` must only depend on ``variables``.
        """
        order = sorted(set(variables))
        for bits in itertools.product((False, True), repeat=len(order)):
            valuation = dict(zip(order, bits, strict=True))
            if self.evaluate(f, valuation):
                yield valuation

    def pick(self, f: Bdd) -> dict[VarId, bool] | None:
        """One satisfying partial valuation, or None for ⊥."""
        self._own(f)
        if f.node == FALSE_NODE:
            return None
        out: dict[VarId, bool] = {}
        u = f.node
        while u > TRUE_NODE:
            lv, lo, hi = self._succ[u]
            if lo != FALSE_NODE:
                out[lv] = False
                u = lo
            else:
                out[lv] = True
                u = hi
        return out

    # ------------------------------------------------------------------
    # Cross-manager
    # ------------------------------------------------------------------

    def transfer(self, f: Bdd) -> Bdd:
        """Rebuild ``f`` (from any manager) in this manager, matching variables by name."""
        if f.manager is self:
            return f
        src = f.manager
        mapping = [self.declare(name) for name in src.var_names]
        cache: dict[int, int] = {}

        def rec(u: int) -> int:
            if u <= TRUE_NODE:
                return u
            r = cache.get(u)
            if r is None:
                lv, lo, hi = src._succ[u]
                r = self._ite(self._var_nodes[mapping[lv]], rec(hi), rec(lo))
                cache[u] = r
            return r

        return Bdd(self, rec(f.node))

    def to_text(self, f: Bdd) -> str:
        """Readable sum-of-products text of ``f`` (exact cover)."""
        from core.boolfn.isop import format_sop, isop

        return format_sop(isop(f, f), self.var_names)
