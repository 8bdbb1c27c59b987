"""Unit tests for stutter-insensitive closure and the stutter-sensitive part."""

import pytest

from core.automaton import LassoWord, accepts_lasso, is_empty
from core.config import override_settings
from core.ltl import parse
from core.stutter import closure_shortcuts, is_stutter_insensitive, si_closure, ss_part
from core.translate import translate
from core.utils.exceptions import StateCapExceededError
from tests.fixtures.automata import negated_property
from tests.fixtures.oracles import all_lassos


@pytest.mark.unit
class TestStutterInsensitivity:
    """is_stutter_insensitive on small formulas."""

    @pytest.mark.parametrize("text", ["F a", "G a", "a U b", "F G a", "G(a -> F b)"])
    def test_next_free_formulas(self, manager, text):
        assert is_stutter_insensitive(translate(parse(text), manager))

    @pytest.mark.parametrize("text", ["X a", "X F a", "a & X !a"])
    def test_next_formulas(self, manager, text):
        assert not is_stutter_insensitive(translate(parse(text), manager))

    def test_running_example(self, manager):
        assert is_stutter_insensitive(negated_property(manager))

    def test_generic_complement_when_formula_unknown(self, manager):
        a = translate(parse("X a"), manager).with_formula(None)
        assert not is_stutter_insensitive(a)


@pytest.mark.unit
class TestClosure:
    def test_closure_contains_language(self, manager):
        """L(a) ⊆ L(si(a)) on every short lasso."""
        a = translate(parse("X F a"), manager)
        closed = si_closure(a)
        assert closed.stutter_insensitive is True
        assert closed.formula is None
        for w in all_lassos(("a",), 4):
            if accepts_lasso(a, w):
                assert accepts_lasso(closed, w)

    def test_closure_adds_stutter_equivalents(self, manager):
        """a·(¬a)^ω is stutter-equivalent to a·a·(¬a)^ω, which satisfies X F a."""
        closed = si_closure(translate(parse("X F a"), manager))
        assert accepts_lasso(closed, LassoWord.of("a", [["a"]], [[]]))
        assert not accepts_lasso(closed, LassoWord.of("a", [], [[]]))

    def test_closure_of_si_language_is_unchanged(self, manager):
        a = translate(parse("F a"), manager)
        closed = si_closure(a)
        for w in all_lassos(("a",), 4):
            assert accepts_lasso(closed, w) == accepts_lasso(a, w)

    def test_shortcuts_only_grow_labels(self, manager):
        a = translate(parse("X a"), manager)
        s = closure_shortcuts(a)
        assert s.num_states == a.num_states
        for w in all_lassos(("a",), 3):
            if accepts_lasso(a, w):
                assert accepts_lasso(s, w)

    def test_state_cap(self, manager):
        override_settings(translate_state_cap=1)
        with pytest.raises(StateCapExceededError):
            si_closure(negated_property(manager))


@pytest.mark.unit
class TestStutterSensitivePart:
    def test_empty_for_si_language(self, manager):
        assert is_empty(ss_part(translate(parse("F a"), manager)))

    def test_next_eventually(self, manager):
        """a·a·(¬a)^ω is in the part; ¬a·a·(¬a)^ω is not."""
        # Given: X F a, whose stutter class of a·a·(¬a)^ω also holds a·(¬a)^ω
        a = translate(parse("X F a"), manager)

        # When: Extracting the stutter-sensitive part
        ss = ss_part(a)

        # Then: Only words whose class leaves X F a remain
        assert accepts_lasso(ss, LassoWord.of("a", [["a"], ["a"]], [[]]))
        assert not accepts_lasso(ss, LassoWord.of("a", [[], ["a"]], [[]]))
        for w in all_lassos(("a",), 4):
            if accepts_lasso(ss, w):
                assert accepts_lasso(a, w)
