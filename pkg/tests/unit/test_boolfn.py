"""Unit tests for the BDD engine and irredundant sum-of-products covers."""

import itertools

import pytest
from hypothesis import given, settings

from core.boolfn import (
    FALSE_SOP,
    TRUE_SOP,
    BddManager,
    BoolOp,
    SumOfProducts,
    format_sop,
    isop,
    isop_bdd,
    label_size,
    sop_size,
    sop_to_bdd,
)
from core.utils.exceptions import (
    InvalidIntervalError,
    ManagerMismatchError,
    NodeCapExceededError,
    UnknownVariableError,
)
from tests.fixtures.generators import intervals


def from_truth_table(mgr: BddManager, table: int, nvars: int):
    """Bit ``i`` of ``table`` is the value on the valuation whose bit ``k`` is variable ``k``."""
    cubes = []
    for i in range(2**nvars):
        if table >> i & 1:
            cubes.append(mgr.cube({k: bool(i >> k & 1) for k in range(nvars)}))
    return mgr.disjoin(cubes)


@pytest.mark.unit
class TestVariables:
    """Variable registration and literals."""

    def test_declare_is_idempotent_and_dense(self, manager):
        """VarIds follow registration order."""
        # When: Declaring atoms, one of them twice
        ids = [manager.declare("p"), manager.declare("q"), manager.declare("p")]

        # Then: Indices are dense and stable
        assert ids == [0, 1, 0]
        assert manager.var_names == ("p", "q")
        assert manager.var_index("q") == 1

    def test_single_variable_sat_count(self, manager):
        """The function v0 has one satisfying valuation over {v0}."""
        a = manager.var("a")
        assert manager.sat_count(a) == 1
        assert manager.sat_count(a, 1) == 1

    def test_contradiction_is_false(self, manager):
        """a ∧ ¬a is ⊥."""
        a = manager.var("a")
        assert (a & ~a).is_false
        assert (a & ~a) == manager.false

    def test_unknown_variable(self, manager):
        """Unregistered names and indices are rejected."""
        with pytest.raises(UnknownVariableError):
            manager.var_index("nope")
        with pytest.raises(UnknownVariableError):
            manager.mk_var(3)

    def test_literal(self, manager):
        v = manager.declare("a")
        assert manager.literal(v, False) == ~manager.var("a")


@pytest.mark.unit
class TestApply:
    """Binary connectives, negation and canonicity."""

    def test_identity_and_absorption(self, manager):
        """AND(f, ⊤) = f and AND(a∧c, c) = a∧c."""
        a, c = manager.var("a"), manager.var("c")
        f = a & c
        assert manager.apply(BoolOp.AND, f, manager.true) == f
        assert (f & c) == f

    def test_disjunction_of_knowledge_labels(self, manager):
        """OR over {c, b∧c, b∧c} collapses to c."""
        b, c = manager.var("b"), manager.var("c")
        assert manager.disjoin([c, b & c, b & c]) == c

    def test_or_sat_count(self, manager):
        """a ∨ b has 3 of 4 satisfying valuations."""
        a, b = manager.var("a"), manager.var("b")
        assert manager.sat_count(a | b, 2) == 3

    def test_negation(self, manager):
        """¬⊤ = ⊥ and ¬(a∨b) = ¬a ∧ ¬b on every valuation."""
        a, b = manager.var("a"), manager.var("b")
        assert (~manager.true).is_false
        f = ~(a | b)
        for va, vb in itertools.product((False, True), repeat=2):
            assert manager.evaluate(f, {0: va, 1: vb}) == (not va and not vb)
        assert f == ~a & ~b

    def test_xor_and_implies(self, manager):
        a, b = manager.var("a"), manager.var("b")
        assert manager.apply(BoolOp.XOR, a, b) == (a & ~b) | (~a & b)
        assert manager.apply(BoolOp.IMPLIES, a, b) == ~a | b

    def test_canonicity(self, manager):
        """Equal functions built differently share their node."""
        a, b, c = manager.var("a"), manager.var("b"), manager.var("c")
        assert (a & (b | c)) == ((a & b) | (a & c))
        assert ((a & (b | c)).node) == ((a & b) | (a & c)).node

    def test_mixing_managers_is_rejected(self, manager):
        other = BddManager()
        with pytest.raises(ManagerMismatchError):
            _ = manager.var("a") & other.var("a")

    def test_node_cap(self):
        """Creating more internal nodes than the cap raises."""
        mgr = BddManager(node_cap=1)
        mgr.var("a")
        with pytest.raises(NodeCapExceededError):
            mgr.var("b")


@pytest.mark.unit
class TestQuantificationAndImplication:
    """exists and implies_check."""

    def test_exists(self, manager):
        """∃a. a∧b = b, ∃a. ¬a∧b = b, ∃∅. f = f."""
        a, b = manager.var("a"), manager.var("b")
        assert manager.exists(a & b, [0]) == b
        assert manager.exists(~a & b, [0]) == b
        assert manager.exists(a & b, []) == a & b

    def test_implies_check(self, manager):
        a, b, c = manager.var("a"), manager.var("b"), manager.var("c")
        assert manager.implies_check(manager.false, b)
        assert manager.implies_check(a & c, a)
        assert not manager.implies_check(a | b, a)
        # Then: ¬a ∧ b witnesses the failure
        assert manager.evaluate(a | b, {0: False, 1: True}) and not manager.evaluate(a, {0: False, 1: True})

    def test_cofactor_support_pick(self, manager):
        a, b = manager.var("a"), manager.var("b")
        f = a & ~b
        assert manager.cofactor(f, 0, True) == ~b
        assert manager.cofactor(f, 0, False).is_false
        assert manager.support(f) == frozenset({0, 1})
        assert manager.pick(f) == {0: True, 1: False}
        assert manager.pick(manager.false) is None

    def test_transfer_matches_names(self, manager):
        """Functions move between managers by variable name."""
        other = BddManager()
        other.var("z")
        f = other.var("b") & ~other.var("z")
        g = manager.transfer(f)
        assert manager.var_names == ("z", "b")
        assert g == manager.var("b") & ~manager.var("z")

    def test_minterms(self, manager):
        a, b = manager.var("a"), manager.var("b")
        assert list(manager.minterms(a ^ b, [0, 1])) == [{0: False, 1: True}, {0: True, 1: False}]


@pytest.mark.unit
class TestIsop:
    """Minato-Morreale covers of intervals."""

    def test_false_lower_bound(self, manager):
        """isop(⊥, h) = ⊥."""
        a = manager.var("a")
        assert isop(manager.false, a).is_false
        assert isop(manager.false, a) == FALSE_SOP

    def test_true_upper_bound(self, manager):
        """isop(l, ⊤) = ⊤."""
        a = manager.var("a")
        assert isop(a, manager.true).is_true
        assert isop(a, manager.true) == TRUE_SOP

    def test_running_example_interval(self, manager):
        """isop(a∧c, a∨¬c) = a."""
        a, c = manager.var("a"), manager.var("c")
        cover = isop(a & c, a | ~c)
        assert format_sop(cover, manager.var_names) == "a"
        assert isop_bdd(a & c, a | ~c) == a

    def test_exact_cover_round_trips(self, manager):
        a, b, c = manager.var("a"), manager.var("b"), manager.var("c")
        f = (a & b) | ~c
        assert sop_to_bdd(isop(f, f), manager) == f

    def test_invalid_interval(self, manager):
        a, b = manager.var("a"), manager.var("b")
        with pytest.raises(InvalidIntervalError):
            isop(a | b, a)

    def test_sizes(self, manager):
        """|⊤| = 0, |a∧c| = 2, |(a∧b)∨¬c| = 3."""
        a, b, c = manager.var("a"), manager.var("b"), manager.var("c")
        assert sop_size(TRUE_SOP) == 0
        assert label_size(a & c) == 2
        assert label_size((a & b) | ~c) == 3

    def test_format(self, manager):
        a, b = manager.var("a"), manager.var("b")
        assert format_sop(FALSE_SOP, manager.var_names) == "0"
        assert format_sop(TRUE_SOP, manager.var_names) == "1"
        assert format_sop(SumOfProducts.of([[(0, True), (1, False)]]), manager.var_names) == "a & !b"
        assert manager.to_text(a | b) in ("a | b", "b | a", "a | !a & b")

    @settings(max_examples=1000, deadline=None)
    @given(intervals(3))
    def test_bounds_and_irredundancy(self, bounds):
        """The cover stays within its bounds; dropping a product or a literal breaks one."""
        # Given: A random interval over three variables
        mgr = BddManager()
        mgr.declare_all(("x0", "x1", "x2"))
        low = from_truth_table(mgr, bounds[0], 3)
        high = from_truth_table(mgr, bounds[1], 3)

        # When: Computing the cover
        cover = isop(low, high)
        f = sop_to_bdd(cover, mgr)

        # Then: low ⇒ f ⇒ high
        assert low.implies(f) and f.implies(high)
        assert isop_bdd(low, high) == f
        products = list(cover)
        for i in range(len(products)):
            rest = SumOfProducts(tuple(products[:i] + products[i + 1 :]))
            assert not low.implies(sop_to_bdd(rest, mgr))
            for j in range(len(products[i])):
                widened = products[i][:j] + products[i][j + 1 :]
                assert not mgr.cube(dict(widened)).implies(high)
