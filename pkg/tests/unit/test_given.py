"""Unit tests for knowledge integration: facts, bounds, min/max, stutter and the driver."""

import time

import pytest
from pydantic import ValidationError

from core.automaton import (
    AutomatonStats,
    Strength,
    is_deterministic,
    is_empty,
    is_universal_syntactic,
    strength,
)
from core.boolfn import BddManager
from core.config import override_settings
from core.given import (
    BoundedTgba,
    KnowledgeBase,
    Outcome,
    StrategyOptions,
    StrategyReport,
    bounds_simplify,
    compute_guarantees,
    project_knowledge,
    quantify_knowledge,
    raw_automaton,
    run_strategy,
    si_relax,
    si_restrict,
    strategy_max,
    strategy_min,
    update_bounds_given,
)
from core.complement import complement_via_formula
from core.ltl import TRUE, And, parse
from core.translate import translate
from core.utils.budget import deadline_scope
from core.utils.exceptions import InvariantViolationError, TimeoutExceededError, UnknownStrategyError
from tests.fixtures.automata import (
    NEGATED_PROPERTY,
    Q0,
    Q0_LOOP,
    Q0_TO_Q1,
    Q0_TO_Q2,
    Q1,
    Q1_LOOP,
    Q2,
    Q2_LOOP_B,
    Q2_LOOP_NOT_B,
    knowledge,
    negated_property,
)
from tests.fixtures.oracles import equivalent_to

RUNNING_PROPERTY = f"!({NEGATED_PROPERTY})"


def problem(formula: str, *facts: str):
    """Property and knowledge base sharing one manager."""
    mgr = BddManager()
    return parse(formula), KnowledgeBase.from_formulas([parse(f) for f in facts], mgr)


@pytest.mark.unit
class TestKnowledgeBase:
    def test_from_formulas_keeps_order(self):
        _, kb = problem("F a", "F G b", "G c")
        assert [str(f) for f in kb] == ["F G b", "G c"]
        assert all(f.automaton.manager is kb.manager for f in kb)
        assert all(f.source == "user" for f in kb)

    def test_capped_facts_are_skipped(self):
        override_settings(translate_state_cap=1)
        _, kb = problem("F a", "G c", "X X a")
        assert kb.formulas == (parse("G c"),)
        assert kb.skipped == (parse("X X a"),)

    def test_relevant_to(self):
        _, kb = problem("F a", "G c", "G(a -> b)")
        relevant = kb.relevant_to(parse("F a"))
        assert relevant.formulas == (parse("G(a -> b)"),)
        assert kb.relevant_to(parse("a & c")) is kb

    def test_conjunction(self):
        _, kb = problem("F a", "F G b", "G c")
        conj = kb.conjunction
        assert conj.formula == And(parse("F G b"), parse("G c"))
        assert conj.source == "conjunction"
        assert len(kb.single()) == 1

    def test_conjunction_of_nothing_is_true(self):
        kb = KnowledgeBase()
        assert kb.conjunction.formula == TRUE
        assert is_universal_syntactic(kb.conjunction.automaton)
        assert not kb


@pytest.mark.unit
class TestGuarantees:
    """State and transition guarantees on the running example."""

    def test_running_example(self, manager):
        """SG(q0) = SG(q1) = c, TG(q1 loop) = c, TG(q0→q2) = ⊥."""
        # Given: The hand-built automata of ¬φ and of F G b ∧ G c
        a = negated_property(manager)
        k = knowledge(manager)
        c = manager.var("c")

        # When: Computing guarantees on the trimmed product
        g = compute_guarantees(a, k)

        # Then: The q2 branch has no guarantee and everything else gets c
        assert g.state[Q0] == c
        assert g.state[Q1] == c
        assert g.state[Q2].is_false
        assert g.transition[Q0_TO_Q1] == c
        assert g.transition[Q0_LOOP] == c
        assert g.transition[Q1_LOOP] == c
        assert g.transition[Q0_TO_Q2].is_false
        assert g.transition[Q2_LOOP_B].is_false
        assert g.transition[Q2_LOOP_NOT_B].is_false

    def test_quantify_knowledge(self, manager):
        a = negated_property(manager)
        other = BddManager()
        k = translate(parse("G(c & d)"), other)
        q = quantify_knowledge(k, a)
        assert q.manager is manager
        assert q.ap == ("c",)
        assert all(t.label == manager.var("c") for t in q.transitions)


@pytest.mark.unit
class TestBounds:
    def test_bounds_after_knowledge(self, manager):
        """low = label ∧ TG and high = label ∨ ¬SG(src)."""
        a = negated_property(manager)
        av, cv = manager.var("a"), manager.var("c")
        b = update_bounds_given(BoundedTgba.of(a), knowledge(manager))
        assert b.low[Q0_TO_Q1] == av & cv
        assert b.high[Q0_TO_Q1] == av | ~cv
        assert b.low[Q0_LOOP] == ~av & cv
        assert b.high[Q0_LOOP] == ~av | ~cv
        assert b.low[Q0_TO_Q2].is_false
        assert b.high[Q1_LOOP].is_true
        for t, lo, hi in zip(a.transitions, b.low, b.high, strict=True):
            assert lo.implies(t.label) and t.label.implies(hi)

    def test_incremental_matches_precise(self, manager):
        """Integrating F G b then G c gives the bounds of their conjunction."""
        a = negated_property(manager)
        _, kb = problem("F a", "F G b", "G c")
        b = BoundedTgba.of(a)
        for fact in kb:
            b = update_bounds_given(b, fact.automaton)
        precise = update_bounds_given(BoundedTgba.of(a), knowledge(manager))
        assert [lo.node for lo in b.low] == [lo.node for lo in precise.low]
        assert [hi.node for hi in b.high] == [hi.node for hi in precise.high]

    def test_bounds_simplify_running_example(self, manager):
        """Relabeling leaves q0 -a-> q1 (⊤ loop) and a q0 ¬a loop: F a."""
        a = negated_property(manager)
        result = bounds_simplify(update_bounds_given(BoundedTgba.of(a), knowledge(manager)))
        assert (result.num_states, result.num_transitions) == (2, 3)
        assert is_deterministic(result)
        assert strength(result) is Strength.TERMINAL
        assert equivalent_to(result, parse("F a"))

    def test_invalid_bounds(self, manager):
        a = negated_property(manager)
        low = tuple(manager.true for _ in a.transitions)
        with pytest.raises(InvariantViolationError):
            BoundedTgba(a, low, tuple(t.label for t in a.transitions))


@pytest.mark.unit
class TestMinMax:
    def test_min_with_implied_knowledge_is_empty(self):
        """¬F a ∧ G a has no model."""
        assert is_empty(strategy_min(parse("F a"), parse("G a")))

    def test_max_universal_when_knowledge_violates(self):
        """G ¬a rules F a out, so ¬F a ∨ ¬G ¬a is universal."""
        assert is_universal_syntactic(strategy_max(parse("F a"), parse("G !a")))

    def test_max(self):
        a = strategy_max(parse("F a"), parse("G a"))
        assert equivalent_to(a, parse("F !a"))

    def test_max_quantified_shrinks_alphabet(self):
        """Without projection ¬K brings b in; with it only a remains."""
        k = parse("G(a -> b)")
        plain = strategy_max(parse("G a"), k)
        projected = strategy_max(parse("G a"), k, use_qe=True)
        assert set(plain.ap) == {"a", "b"}
        assert projected.ap == ("a",)

    def test_project_knowledge(self):
        k = parse("X(a & b) & X(!a & b)")
        assert str(project_knowledge(k, parse("F b"))) == "X b"


@pytest.mark.unit
class TestStutterStrategies:
    """The stutter problem: ¬φ = X F a, knowing ¬a initially."""

    def test_si_relax(self, manager):
        # Given: X F a and the fact !a
        a = raw_automaton(parse("!X F a"), manager)
        kb = KnowledgeBase.from_formulas([parse("!a")], manager)

        # When: Relaxing to the stutter closure
        result = si_relax(a, complement_via_formula(a.formula, manager), kb)

        # Then: The closure F a is taken
        assert result.stutter_insensitive is True
        assert equivalent_to(result, parse("F a"))

    def test_si_relax_unchanged_without_excluding_fact(self, manager):
        a = raw_automaton(parse("!X F a"), manager)
        kb = KnowledgeBase.from_formulas([parse("G b")], manager)
        assert si_relax(a, complement_via_formula(a.formula, manager), kb) is a

    def test_si_relax_on_si_automaton(self, manager):
        a = raw_automaton(parse("!F a"), manager)
        kb = KnowledgeBase.from_formulas([parse("!a")], manager)
        assert si_relax(a, complement_via_formula(a.formula, manager), kb) is a

    def test_si_restrict(self, manager):
        a = raw_automaton(parse("!X F a"), manager)
        kb = KnowledgeBase.from_formulas([parse("!a")], manager)
        result = si_restrict(a, complement_via_formula(a.formula, manager), kb)
        assert equivalent_to(result, parse("G a | F(!a & F a)"))

    def test_si_restrict_degrades_on_cap(self, manager):
        a = raw_automaton(parse("!X F a"), manager)
        kb = KnowledgeBase.from_formulas([parse("!a")], manager)
        flags: list[str] = []
        result = si_restrict(a, complement_via_formula(a.formula, manager), kb, cap=1, flags=flags)
        assert result is a
        assert flags == ["complement-cap"]


@pytest.mark.unit
class TestRunStrategy:
    """The pipeline driver and its reports."""

    def test_raw_is_unchanged(self):
        phi, kb = problem(RUNNING_PROPERTY, "F G b", "G c")
        a, report = run_strategy("raw", phi, kb)
        assert report.outcome is Outcome.UNCHANGED
        assert report.flags == []
        assert report.before == report.after
        assert a.formula == parse(NEGATED_PROPERTY)

    @pytest.mark.parametrize("name", ["BM", "p.BM"])
    def test_bounds_on_running_example(self, name):
        phi, kb = problem(RUNNING_PROPERTY, "F G b", "G c")
        a, report = run_strategy(name, phi, kb)
        assert report.outcome is Outcome.SIMPLIFIED
        assert report.after.states <= report.before.states
        assert equivalent_to(a, parse("F a"))

    @pytest.mark.parametrize("name", ["p.min", "p.min∃", "p.minE", "BM"])
    def test_implied_knowledge_gives_empty(self, name):
        phi, kb = problem("F a", "G a")
        a, report = run_strategy(name, phi, kb)
        assert report.outcome is Outcome.EMPTY
        assert report.after.transitions == 0
        assert is_empty(a)

    def test_quantified_min_is_empty(self):
        """The projection of G(¬a ∧ b) on a is G ¬a, which contradicts F a."""
        phi, kb = problem("G !a", "G(!a & b)")
        _, report = run_strategy("p.min∃", phi, kb)
        assert report.outcome is Outcome.EMPTY

    def test_universal(self):
        phi, kb = problem("F a", "G !a")
        a, report = run_strategy("p.max", phi, kb)
        assert report.outcome is Outcome.UNIVERSAL
        assert is_universal_syntactic(a)

    def test_irrelevant_facts_are_ignored(self):
        phi, kb = problem("F a", "G c")
        _, report = run_strategy("BM", phi, kb)
        assert report.outcome is Outcome.UNCHANGED

    def test_combined_stages(self):
        phi, kb = problem(RUNNING_PROPERTY, "F G b", "G c")
        a, report = run_strategy("BM+SIrelax", phi, kb)
        assert report.strategy == "BM+SIrelax"
        assert equivalent_to(a, parse("F a"))

    def test_skipped_fact_flag(self, manager):
        kb = KnowledgeBase([], manager, skipped=[parse("X X a")])
        _, report = run_strategy("raw", parse("F a"), kb)
        assert report.flags == ["fact-skipped"]

    def test_cap_flag(self):
        phi, kb = problem("!X F a", "!a")
        _, report = run_strategy("SIrestrict", phi, kb, StrategyOptions(complement_cap=1))
        assert "complement-cap" in report.flags
        assert report.outcome is Outcome.UNCHANGED

    def test_unknown_strategy(self):
        phi, kb = problem("F a")
        with pytest.raises(UnknownStrategyError):
            run_strategy("p.nope", phi, kb)

    def test_timeout_propagates(self):
        phi, kb = problem(RUNNING_PROPERTY, "F G b", "G c")
        with deadline_scope(1):
            time.sleep(0.01)
            with pytest.raises(TimeoutExceededError):
                run_strategy("BM", phi, kb)


@pytest.mark.unit
class TestStrategyReport:
    def _stats(self, transitions: int) -> AutomatonStats:
        return AutomatonStats(
            states=1,
            transitions=transitions,
            ap_count=1,
            label_size_total=0,
            is_det=True,
            strength=Strength.TERMINAL,
        )

    def test_empty_requires_no_transitions(self):
        with pytest.raises(ValidationError):
            StrategyReport(
                strategy="raw",
                outcome=Outcome.EMPTY,
                before=self._stats(1),
                after=self._stats(1),
                time_ms=0.0,
            )

    def test_serializes(self):
        report = StrategyReport(
            strategy="raw",
            outcome=Outcome.EMPTY,
            before=self._stats(1),
            after=self._stats(0),
            time_ms=1.5,
        )
        data = report.model_dump(mode="json")
        assert data["outcome"] == "empty"
        assert data["after"]["is_si"] == "unknown"
