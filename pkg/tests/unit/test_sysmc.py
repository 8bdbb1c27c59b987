"""Unit tests for Kripke structures, the emptiness check and the knowledge seekers."""

import pytest

from core.automaton import LassoWord
from core.given import Outcome, raw_automaton
from core.ltl import TRUE, X, atom, holds_on_lasso, parse
from core.sysmc import (
    Fact,
    FactKind,
    Kripke,
    VerdictStatus,
    canonical,
    check,
    load_system,
    model_check,
    seek_all,
    seek_convergent,
    seek_first_steps,
    seek_initial,
    seek_invariants,
)
from core.translate import translate
from core.utils.exceptions import AlphabetMismatchError, InvariantViolationError


@pytest.fixture
def system(systems_dir):
    def load(name: str) -> Kripke:
        return load_system(systems_dir / f"{name}.kts")

    return load


@pytest.mark.unit
class TestKripke:
    def test_build_adds_self_loops_to_dead_ends(self):
        s = Kripke.build("a", [("s0", {"a"}), ("s1", set())], "s0", [("s0", "s1")])
        assert s.successors == ((1,), (1,))
        assert s.valuation(1) == frozenset()

    def test_undeclared_edge(self):
        with pytest.raises(InvariantViolationError):
            Kripke.build("a", [("s0", {"a"})], "s0", [("s0", "nowhere")])

    def test_unknown_atom_in_valuation(self):
        with pytest.raises(InvariantViolationError):
            Kripke.build("a", [("s0", {"b"})], "s0", [])

    def test_reachable_in_bfs_order(self, system):
        s = system("convergent")
        assert [s.names[q] for q in s.reachable] == ["s0", "s1", "s2", "s3"]
        assert s.graph.number_of_edges() == 4

    def test_is_path(self, system):
        s = system("alternator")
        off, on = s.names.index("off"), s.names.index("on")
        assert s.initial == off
        assert s.is_path([off, on, off])
        assert not s.is_path([on, off])
        assert s.literals(on, ["a"]) == {"a": True}


@pytest.mark.unit
class TestCheck:
    def test_invariant_holds(self, system):
        verdict = check(system("always_a"), raw_automaton(parse("G a")))
        assert verdict.holds
        assert verdict.counterexample is None

    def test_mutual_exclusion_holds(self, system):
        assert check(system("mutex"), raw_automaton(parse("G !(a & b)"))).holds

    def test_failure_has_counterexample(self, system):
        """The alternator violates G a and the witness is one of its runs."""
        # Given: A system whose initial state falsifies a
        s = system("alternator")

        # When: Checking G a
        verdict = check(s, raw_automaton(parse("G a")))

        # Then: The lasso violates the property and follows system edges
        assert verdict.status is VerdictStatus.FAILS
        assert isinstance(verdict.counterexample, LassoWord)
        assert not holds_on_lasso(parse("G a"), verdict.counterexample)
        assert s.is_path(verdict.path)
        assert 0 <= verdict.loop_start < len(verdict.path)
        assert str(verdict).startswith("fails")

    def test_alphabet_mismatch(self, system, manager):
        with pytest.raises(AlphabetMismatchError):
            check(system("always_a"), translate(parse("F c"), manager))


@pytest.mark.unit
class TestSeekers:
    """Facts sought on the fixture systems."""

    def test_initial(self, system):
        s = system("convergent")
        assert seek_initial(s).formula == parse("!a & !b & c")
        assert seek_initial(s, ["c"]).formula == atom("c")
        assert seek_initial(s, ["z"]).formula == TRUE

    def test_first_steps(self, system):
        facts = seek_first_steps(system("alternator"), depth=2)
        assert [f.formula for f in facts] == [X(atom("a")), X(X(parse("!a")))]
        assert all(f.kind is FactKind.FIRST_STEPS for f in facts)

    def test_first_steps_frontier_cap(self, system):
        assert seek_first_steps(system("mutex"), depth=2, frontier_cap=1) == []

    def test_first_steps_truncation_is_warned(self, system, mocker):
        """Skipped depths are reported at warning level, not dropped silently."""
        # Given: A module logger we can inspect
        log = mocker.patch("core.sysmc.seekers.logger")

        # When: The first frontier of mutex already exceeds the cap
        seek_first_steps(system("mutex"), depth=2, frontier_cap=1)

        # Then: One warning names where enumeration stopped
        log.warning.assert_called_once_with(
            "seek.first_steps_truncated", depth=1, last_depth=2, frontier=2, cap=1
        )

    def test_first_steps_within_cap_is_quiet(self, system, mocker):
        log = mocker.patch("core.sysmc.seekers.logger")
        seek_first_steps(system("alternator"), depth=2)
        log.warning.assert_not_called()

    def test_first_steps_rejects_zero_depth(self, system):
        with pytest.raises(ValueError):
            seek_first_steps(system("mutex"), depth=0)

    def test_invariants(self, system):
        facts = seek_invariants(system("convergent"))
        assert [f.formula for f in facts] == [parse("G c")]

    def test_compat(self, system):
        facts = seek_invariants(system("mutex"))
        assert [(f.kind, f.formula) for f in facts] == [(FactKind.COMPAT, parse("G !(a & b)"))]

    def test_invariant_labels(self, system, manager):
        a, b = manager.var("a"), manager.var("b")
        facts = seek_invariants(system("mutex"), labels=[~(a & b), a, manager.true])
        assert len(facts) == 2
        assert facts[1].kind is FactKind.INVARIANT
        assert facts[1].evidence == "label holds in every reachable state"

    def test_convergent(self, system):
        facts = seek_convergent(system("convergent"))
        assert [f.formula for f in facts] == [parse("F G b"), parse("F G c")]

    def test_convergent_to_either_value(self, system):
        facts = seek_convergent(system("two_loops"))
        assert [f.formula for f in facts] == [parse("F(G a | G !a)")]

    def test_alternation_never_converges(self, system):
        assert seek_convergent(system("alternator")) == []

    def test_canonical_orders_and_deduplicates(self):
        g = Fact(kind=FactKind.INVARIANT, formula=parse("G c"))
        i = Fact(kind=FactKind.INITIAL, formula=parse("c"))
        assert canonical([g, i, g]) == [i, g]

    def test_seek_all_settles_constant_atoms(self, system):
        """A constant invariant makes the convergence fact on the same atom redundant."""
        # Given: c holds everywhere in the convergent system
        s = system("convergent")

        # When: Seeking for a property over c and a
        formulas = [f.formula for f in seek_all(s, parse("G(c -> F a)"))]

        # Then: G c is kept and F G c is not
        assert parse("G c") in formulas
        assert parse("F G c") not in formulas
        assert TRUE not in formulas

    def test_seek_all_restricts_to_property_atoms(self, system):
        formulas = [f.formula for f in seek_all(system("convergent"), parse("F G b | G F a"))]
        assert parse("F G b") in formulas
        assert parse("G c") not in formulas

    @pytest.mark.parametrize("name", ["always_a", "alternator", "convergent", "mutex", "two_loops"])
    def test_every_fact_holds_on_its_system(self, system, name):
        """Each sought fact K satisfies L(S) ⊆ L(K)."""
        s = system(name)
        phi = parse("G F a") if "b" not in s.ap else parse("G(a -> F b)")
        for fact in seek_all(s, phi):
            assert check(s, raw_automaton(fact.formula)).holds, fact.text


@pytest.mark.unit
class TestModelCheck:
    def test_raw(self, system):
        verdict, report = model_check(system("convergent"), parse("F G b"))
        assert verdict.holds
        assert report.strategy == "raw"

    def test_gate_answers_without_product(self, system):
        """Knowledge that implies the property empties the gated automaton."""
        # Given: The mutex system and its compatibility fact
        s = system("mutex")
        facts = seek_invariants(s)

        # When: Checking with the gate
        verdict, report = model_check(s, parse("G !(a & b)"), facts, strategy="BM", gate=True)

        # Then: The verdict comes from the gate
        assert verdict.holds
        assert verdict.reason == "p.min∃ is empty"
        assert report.outcome is Outcome.EMPTY

    def test_simplified_automaton_keeps_failures(self, system):
        s = system("alternator")
        phi = parse("G a")
        verdict, _ = model_check(s, phi, seek_all(s, phi), strategy="BM")
        assert verdict.fails
        assert not holds_on_lasso(phi, verdict.counterexample)
