"""Unit tests for LTL parsing, printing, rewriting and lasso semantics."""

import pytest
from hypothesis import given, settings

from core.automaton import LassoWord
from core.boolfn import BddManager
from core.ltl import (
    FALSE,
    TRUE,
    F,
    G,
    Not,
    Implies,
    R,
    U,
    X,
    And,
    Or,
    atom,
    atoms,
    atoms_in_order,
    from_bdd,
    holds_on_lasso,
    is_boolean,
    negate,
    nnf,
    parse,
    qe_syntactic,
    simplify_light,
    to_bdd,
)
from core.utils.exceptions import LtlSyntaxError
from tests.fixtures.generators import formulas, lassos

a, b, c = atom("a"), atom("b"), atom("c")
RUNNING_EXAMPLE = "F(a & c) | G((F b) & (F !b))"


@pytest.mark.unit
class TestParse:
    """Parsing and printing."""

    def test_running_example(self):
        """The negated property of the running example parses to its tree."""
        # When: Parsing the text
        f = parse(RUNNING_EXAMPLE)

        # Then: The tree has the expected shape
        assert f == Or(F(And(a, c)), G(And(F(b), F(Not(b)))))
        assert str(f) == "F(a & c) | G(F b & F !b)"

    def test_atom_and_constants(self):
        assert parse("a") == a
        assert parse("true") == TRUE
        assert parse("0") == FALSE

    def test_precedence(self):
        """Unary binds tighter than U, U tighter than &, & tighter than |, | tighter than ->."""
        assert parse("!a U b & c | a -> b") == Implies(Or(And(U(Not(a), b), c), a), b)
        assert parse("a U b U c") == U(a, U(b, c))
        assert parse("X F G a") == X(F(G(a)))

    def test_aliases(self):
        assert parse("a && b || ~c") == Or(And(a, b), Not(c))

    def test_print_parse_fixpoint(self):
        f = parse("a U (b R c)")
        assert parse(str(f)) == f
        assert str(parse(str(f))) == str(f)

    @pytest.mark.parametrize(
        ("text", "position"),
        [("a &", 3), ("(a | b", 6), ("a $ b", 2), ("", 0)],
    )
    def test_syntax_errors_carry_position(self, text, position):
        with pytest.raises(LtlSyntaxError) as exc:
            parse(text)
        assert exc.value.position == position

    @settings(max_examples=200)
    @given(formulas(constants=True))
    def test_printing_round_trips(self, f):
        """Printing then parsing gives back the same formula."""
        assert parse(str(f)) == f


@pytest.mark.unit
class TestRewrite:
    """Negation normal form, light simplification and quantification."""

    def test_nnf_dualities(self):
        """¬G a = F ¬a and ¬(a U b) = ¬a R ¬b."""
        assert nnf(Not(G(a))) == F(Not(a))
        assert nnf(Not(U(a, b))) == R(Not(a), Not(b))
        assert negate(F(a)) == G(Not(a))

    def test_nnf_expands_implication(self):
        assert nnf(parse("a -> b")) == Or(Not(a), b)
        assert nnf(parse("!(a -> b)")) == And(a, Not(b))

    def test_simplify_light(self):
        assert simplify_light(parse("a & 1 & a")) == a
        assert simplify_light(parse("a & !a")) == FALSE
        assert simplify_light(parse("!!a | 0")) == a
        assert simplify_light(parse("F F a")) == F(a)
        assert simplify_light(parse("1 U b")) == F(b)

    def test_qe_example(self):
        """∃a. X(a∧b) ∧ X(¬a∧b) is X b."""
        # Given: A knowledge formula mentioning a
        k = parse("X(a & b) & X(!a & b)")

        # When: Quantifying a away
        result = qe_syntactic({"a"}, k)

        # Then: Both Boolean subformulas project to b and merge
        assert result == X(b)

    def test_qe_identity_and_invariant(self):
        k = parse("X(a & b) & X(!a & b)")
        assert qe_syntactic(set(), k) == k
        assert qe_syntactic({"b"}, G(And(a, b))) == G(a)

    def test_qe_over_approximates(self):
        """Every lasso satisfying K satisfies QE(P, K)."""
        k = parse("G(a -> b) & F(a & c)")
        projected = qe_syntactic({"a"}, k)
        assert "a" not in atoms(projected)
        w = LassoWord.of("abc", [["a", "b", "c"]], [["b"]])
        assert holds_on_lasso(k, w)
        assert holds_on_lasso(projected, w)


@pytest.mark.unit
class TestAtoms:
    def test_atoms(self):
        assert atoms(F(And(a, c))) == {"a", "c"}
        assert atoms(TRUE) == frozenset()
        assert atoms(parse(RUNNING_EXAMPLE)) == {"a", "b", "c"}

    def test_atoms_in_order(self):
        assert atoms_in_order(parse("G(c -> F(a U b))")) == ("c", "a", "b")


@pytest.mark.unit
class TestBooleanConversion:
    def test_round_trip(self):
        mgr = BddManager()
        f = parse("(a & b) | !c")
        assert is_boolean(f)
        assert not is_boolean(parse("X a"))
        assert to_bdd(from_bdd(to_bdd(f, mgr)), mgr) == to_bdd(f, mgr)

    def test_temporal_is_rejected(self):
        with pytest.raises(ValueError):
            to_bdd(parse("F a"), BddManager())


@pytest.mark.unit
class TestLassoSemantics:
    """Direct evaluation on u·v^ω."""

    def test_next_eventually(self):
        """X F a rejects a·(¬a)^ω and accepts a·a·(¬a)^ω."""
        f = parse("X F a")
        assert not holds_on_lasso(f, LassoWord.of("a", [["a"]], [[]]))
        assert holds_on_lasso(f, LassoWord.of("a", [["a"], ["a"]], [[]]))

    def test_until_and_release(self):
        w = LassoWord.of("ab", [["a"], ["a"]], [["b"]])
        assert holds_on_lasso(parse("a U b"), w)
        assert holds_on_lasso(parse("F G b"), w)
        assert not holds_on_lasso(parse("G F a"), w)
        assert holds_on_lasso(parse("b R (a | b)"), w)

    @settings(max_examples=200)
    @given(formulas(), lassos())
    def test_negation_flips(self, f, w):
        """w ⊨ ¬f iff not w ⊨ f, and NNF preserves truth."""
        assert holds_on_lasso(Not(f), w) != holds_on_lasso(f, w)
        assert holds_on_lasso(nnf(f), w) == holds_on_lasso(f, w)
        assert holds_on_lasso(simplify_light(f), w) == holds_on_lasso(f, w)
