"""Property suites over random properties and facts (slow)."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.automaton import accepts_lasso, is_empty, product
from core.boolfn import BddManager
from core.given import ROSTER, KnowledgeBase, Outcome, raw_automaton, run_strategy
from core.ltl import And, Not, holds_on_lasso
from core.translate import translate
from tests.fixtures.generators import ATOMS, formulas, lassos
from tests.fixtures.oracles import contained_in, random_lassos, same_on

facts_lists = st.lists(formulas(max_leaves=3), min_size=1, max_size=2)


@pytest.mark.integration
@pytest.mark.slow
class TestKnowledgeEquivalenceProperty:
    @settings(max_examples=200)
    @given(formulas(max_leaves=4), facts_lists, st.sampled_from(ROSTER), lassos())
    def test_result_agrees_with_negation_inside_knowledge(self, phi, facts, strategy, w):
        """A word allowed by K is in L(B) iff it violates φ."""
        kb = KnowledgeBase.from_formulas(facts, BddManager())
        automaton, report = run_strategy(strategy, phi, kb)
        if holds_on_lasso(And(*facts), w):
            assert accepts_lasso(automaton, w) == holds_on_lasso(Not(phi), w)
        if report.outcome is Outcome.EMPTY:
            assert is_empty(automaton)

    @settings(max_examples=60)
    @given(formulas(max_leaves=4), facts_lists, st.sampled_from(ROSTER))
    def test_nothing_outside_negation_inside_knowledge(self, phi, facts, strategy):
        kb = KnowledgeBase.from_formulas(facts, BddManager())
        automaton, _ = run_strategy(strategy, phi, kb)
        k = translate(And(*facts), automaton.manager)
        assert contained_in(product(automaton, k), Not(phi))

    @settings(max_examples=60)
    @given(formulas(max_leaves=4), facts_lists)
    def test_bounds_never_grow(self, phi, facts):
        kb = KnowledgeBase.from_formulas(facts, BddManager())
        _, report = run_strategy("BM", phi, kb)
        assert report.after.states <= report.before.states


@pytest.mark.integration
@pytest.mark.slow
class TestBoundsProperty:
    """BM output and A_¬φ agree inside the knowledge."""

    @settings(max_examples=500)
    @given(formulas(max_leaves=4), facts_lists, st.integers(min_value=0, max_value=2**16))
    def test_products_agree(self, phi, facts, seed):
        # Given: The BM output and the raw automaton for one random problem
        kb = KnowledgeBase.from_formulas(facts, BddManager())
        bounded, _ = run_strategy("BM", phi, kb)
        raw = raw_automaton(phi, bounded.manager)
        k = translate(And(*facts), bounded.manager)

        # When: Intersecting both with the knowledge
        left, right = product(bounded, k), product(raw, k)

        # Then: Emptiness and membership of random lassos coincide
        assert is_empty(left) == is_empty(right)
        assert not same_on(left, right, random_lassos(ATOMS, 200, max_len=6, seed=seed))
