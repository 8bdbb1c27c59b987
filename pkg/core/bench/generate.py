"""Random bench corpora whose facts share atoms with the property."""

from __future__ import annotations

import random

from core.bench.problems import Problem
from core.ltl import F, Formula, G, Not, Or, R, U, X, And, atom, atoms_in_order

DEFAULT_ATOMS = ("a", "b", "c")

_UNARY = (Not, X, F, G)
_BINARY = (And, Or, U, R)


def random_formula(rng: random.Random, atoms: tuple[str, ...], depth: int) -> Formula:
    """A formula of nesting depth at most ``depth`` over ``atoms``."""
    if depth <= 0 or rng.random() < 0.25:
        return atom(rng.choice(atoms))
    if rng.random() < 0.45:
        return rng.choice(_UNARY)(random_formula(rng, atoms, depth - 1))
    op = rng.choice(_BINARY)
    return op(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1))


def _literal(rng: random.Random, name: str) -> Formula:
    return atom(name) if rng.random() < 0.5 else Not(atom(name))


def random_fact(rng: random.Random, atoms: tuple[str, ...]) -> Formula:
    """A fact in one of the shapes a knowledge seeker emits."""
    x = rng.choice(atoms)
    y = rng.choice(atoms)
    shape = rng.randrange(6)
    if shape == 0:
        return _literal(rng, x)
    if shape == 1:
        return X(_literal(rng, x))
    if shape == 2:
        return G(_literal(rng, x))
    if shape == 3:
        return G(Not(And(_literal(rng, x), _literal(rng, y)))) if x != y else G(_literal(rng, x))
    if shape == 4:
        return F(G(_literal(rng, x)))
    return F(Or(G(atom(x)), G(Not(atom(x)))))


def generate_problems(
    n: int,
    seed: int = 0,
    atoms: tuple[str, ...] = DEFAULT_ATOMS,
    depth: int = 4,
    max_facts: int = 2,
) -> list[Problem]:
    """``n`` reproducible problems; every fact mentions an atom of its property."""
    rng = random.Random(seed)
    problems: list[Problem] = []
    for i in range(n):
        phi = random_formula(rng, atoms, depth)
        used = atoms_in_order(phi)
        facts = [random_fact(rng, used) for _ in range(rng.randint(1, max_facts))]
        facts = list(dict.fromkeys(facts))
        problems.append(
            Problem(name=f"gen-{seed}-{i:04d}", formula=str(phi), facts=[str(f) for f in facts])
        )
    return problems
