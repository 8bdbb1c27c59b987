"""Unit tests for LTL to TGBA translation and postprocessing."""

import time
from dataclasses import replace

import pytest
from hypothesis import given, settings

from core.automaton import (
    LassoWord,
    TgbaBuilder,
    accepts_lasso,
    is_empty,
    is_universal_syntactic,
    mask_of,
)
from core.boolfn import BddManager
from core.config import override_settings
from core.ltl import FALSE, TRUE, holds_on_lasso, parse
from core.translate import eventualities, minimize_marks, simplify, translate
from core.utils.budget import deadline_scope
from core.utils.exceptions import StateCapExceededError, TimeoutExceededError
from tests.fixtures.automata import NEGATED_PROPERTY, negated_property
from tests.fixtures.generators import formulas, lassos
from tests.fixtures.oracles import all_lassos, disagreements


@pytest.mark.unit
class TestTranslate:
    """Language of the tableau automaton."""

    def test_true_is_universal(self, manager):
        a = translate(TRUE, manager)
        assert is_universal_syntactic(a)
        assert a.formula == TRUE

    def test_false_is_empty(self, manager):
        a = translate(FALSE, manager)
        assert a.num_states == 1
        assert not a.transitions
        assert is_empty(a)

    def test_contradiction_is_empty(self, manager):
        """G a ∧ F ¬a has no model."""
        assert is_empty(translate(parse("G a & F !a"), manager))

    def test_eventually(self, manager):
        """F a accepts exactly the lassos where a occurs."""
        # Given: The automaton of F a
        f = parse("F a")
        a = translate(f, manager)

        # Then: It agrees with the semantics on every short lasso
        assert a.ap == ("a",)
        assert a.num_marks == 1
        assert not disagreements(a, f, all_lassos(("a",), 4))

    def test_atoms_declared_in_order(self, manager):
        a = translate(parse("G(c -> F(a U b))"), manager)
        assert a.ap == ("c", "a", "b")
        assert manager.var_names == ("c", "a", "b")

    def test_one_mark_per_eventuality(self):
        g = parse("F a & (b U c) & F a")
        assert eventualities(g) == [parse("F a"), parse("b U c")]

    def test_running_example(self, manager):
        f = parse(NEGATED_PROPERTY)
        a = translate(f, manager)
        assert a.formula == f
        assert not disagreements(a, f, all_lassos(("a", "b", "c"), 3))

    def test_state_cap(self):
        override_settings(translate_state_cap=1)
        with pytest.raises(StateCapExceededError):
            translate(parse("X X a"), BddManager())

    def test_deadline(self):
        with deadline_scope(1):
            time.sleep(0.01)
            with pytest.raises(TimeoutExceededError):
                translate(parse("F a"), BddManager())

    @settings(max_examples=150)
    @given(formulas(), lassos())
    def test_lasso_membership_matches_semantics(self, f, w):
        """w ∈ L(translate(f)) iff w ⊨ f."""
        a = translate(f, BddManager())
        assert accepts_lasso(a, w) == holds_on_lasso(f, w)


@pytest.mark.unit
class TestSimplify:
    """Language-preserving reductions."""

    def test_running_example_does_not_grow(self, manager):
        a = negated_property(manager)
        s = simplify(a)
        assert s.num_states <= a.num_states
        assert s.num_transitions <= a.num_transitions
        assert s.formula == a.formula
        assert not disagreements(s, a.formula, all_lassos(("a", "b", "c"), 3))

    def test_keeps_property_bit(self, manager):
        a = replace(translate(parse("F a"), manager), stutter_insensitive=True)
        assert simplify(a).stutter_insensitive is True

    def test_minimize_marks_drops_implied_mark(self, manager):
        """A mark carried wherever another is carried is redundant."""
        b = TgbaBuilder(manager, ("a",), num_marks=2)
        q = b.new_state()
        a = manager.var("a")
        b.add(q, a, mask_of([0, 1]), q)
        b.add(q, ~a, mask_of([1]), q)
        m = minimize_marks(b.build(q))
        assert m.num_marks == 1
        assert accepts_lasso(m, LassoWord.of("a", [], [["a"]]))
        assert not accepts_lasso(m, LassoWord.of("a", [], [[]]))

    @settings(max_examples=100)
    @given(formulas(), lassos())
    def test_simplify_preserves_language(self, f, w):
        a = translate(f, BddManager())
        s = simplify(a)
        assert s.num_states <= a.num_states
        assert accepts_lasso(s, w) == accepts_lasso(a, w)
