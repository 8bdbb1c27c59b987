"""Hypothesis strategies for formulas, lassos, systems and Boolean intervals."""

from hypothesis import strategies as st

from core.automaton import LassoWord
from core.ltl import FALSE, TRUE, And, F, G, Not, Or, R, U, X, atom
from core.sysmc import Kripke

ATOMS = ("a", "b", "c")


def formulas(atoms=ATOMS, max_leaves: int = 5, constants: bool = False):
    """Random LTL formulas over ``atoms``; nesting stays shallow through ``max_leaves``."""
    leaves = [atom(x) for x in atoms] + ([TRUE, FALSE] if constants else [])

    def extend(children):
        return st.one_of(
            children.map(Not),
            children.map(X),
            children.map(F),
            children.map(G),
            st.tuples(children, children).map(lambda p: And(*p)),
            st.tuples(children, children).map(lambda p: Or(*p)),
            st.tuples(children, children).map(lambda p: U(*p)),
            st.tuples(children, children).map(lambda p: R(*p)),
        )

    return st.recursive(st.sampled_from(leaves), extend, max_leaves=max_leaves)


def boolean_formulas(atoms=ATOMS, max_leaves: int = 6):
    leaves = st.sampled_from([atom(x) for x in atoms])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda p: And(*p)),
            st.tuples(children, children).map(lambda p: Or(*p)),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def lassos(atoms=ATOMS, max_prefix: int = 3, max_cycle: int = 3):
    letter = st.frozensets(st.sampled_from(atoms))
    return st.builds(
        lambda u, v: LassoWord(tuple(atoms), tuple(u), tuple(v)),
        st.lists(letter, max_size=max_prefix),
        st.lists(letter, min_size=1, max_size=max_cycle),
    )


def truth_tables(num_vars: int = 3):
    """Truth tables as bit masks over the ``2**num_vars`` valuations."""
    return st.integers(min_value=0, max_value=2 ** (2**num_vars) - 1)


def intervals(num_vars: int = 3):
    """Pairs of truth tables ``(low, high)`` with ``low ⇒ high``."""
    return st.tuples(truth_tables(num_vars), truth_tables(num_vars)).map(lambda p: (p[0] & p[1], p[0] | p[1]))


@st.composite
def kripke_systems(draw, atoms=("a", "b"), max_states: int = 4):
    """Small systems over ``atoms``; dead ends get a self-loop."""
    n = draw(st.integers(min_value=1, max_value=max_states))
    names = [f"s{i}" for i in range(n)]
    valuations = draw(st.lists(st.frozensets(st.sampled_from(atoms)), min_size=n, max_size=n))
    edges = draw(st.lists(st.tuples(st.sampled_from(names), st.sampled_from(names)), max_size=2 * n))
    return Kripke.build(atoms, list(zip(names, valuations, strict=True)), names[0], edges)
