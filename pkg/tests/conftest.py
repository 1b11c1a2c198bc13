"""Shared fixtures: the worked example programs and independent oracles.

``oracle_answer_sets`` re-implements answer-set checking from scratch
(its own reduct and closure code, no pruning) so that the library's
enumerator is cross-checked against a second, independent route.
"""

import itertools
import random

import pytest

from aspnf import Literal, Program, Rule, parse_program

PI5_TEXT = """
p :- not p.
p :- not a, not c.
a :- not b.
b :- not a.
c :- not d.
d :- not c.
"""

PI6_TEXT = """
a :- not b.
b :- not a.
p :- not p, not b.
q :- not q.
q :- not a.
"""

# An odd self-loop reachable from an even cycle through a two-atom
# chain hanging off an auxiliary rule (an even OR bridge).
CASE_I_TEXT = """
p :- not p.
p :- not e.
e :- not f.
f :- not a.
a :- not b.
b :- not a.
"""

CASE_II_TEXT = """
p :- not p.
p :- not e.
e :- not f.
f :- not g.
g :- not a.
a :- not b.
b :- not a.
"""

CASE_III_TEXT = """
p :- not p, not e.
e :- not f.
f :- not a.
a :- not b.
b :- not a.
"""

CASE_IV_TEXT = """
p :- not p, not e.
e :- not f.
f :- not g.
g :- not a.
a :- not b.
b :- not a.
"""


@pytest.fixture
def pi5() -> Program:
    return parse_program(PI5_TEXT)


@pytest.fixture
def pi6() -> Program:
    return parse_program(PI6_TEXT)


@pytest.fixture
def case_i() -> Program:
    return parse_program(CASE_I_TEXT)


@pytest.fixture
def case_ii() -> Program:
    return parse_program(CASE_II_TEXT)


@pytest.fixture
def case_iii() -> Program:
    return parse_program(CASE_III_TEXT)


@pytest.fixture
def case_iv() -> Program:
    return parse_program(CASE_IV_TEXT)


def oracle_answer_sets(program: Program) -> list[frozenset[str]]:
    """Brute force over every subset of the universe, no pruning.

    Implements the reduct and the positive closure inline so the result
    does not depend on the code under test. Output order: increasing
    cardinality, then lexicographic on sorted atom names.
    """
    atoms = sorted(program.atoms)
    compiled = [
        (
            rule.head,
            [lit.atom for lit in rule.body if not lit.negated],
            [lit.atom for lit in rule.body if lit.negated],
        )
        for rule in program.rules
    ]
    result = []
    for size in range(len(atoms) + 1):
        for combo in itertools.combinations(atoms, size):
            candidate = set(combo)
            surviving = [
                (head, positives)
                for head, positives, negatives in compiled
                if not any(a in candidate for a in negatives)
            ]
            model: set[str] = set()
            changed = True
            while changed:
                changed = False
                for head, positives in surviving:
                    if head not in model and all(a in model for a in positives):
                        model.add(head)
                        changed = True
            if model == candidate:
                result.append(frozenset(candidate))
    return result


def all_antichains(atoms) -> list[frozenset[frozenset[str]]]:
    """Every anti-chain over the given universe, exhaustively.

    Includes the degenerate ones (the empty collection and the
    collection holding only the empty set). Generated recursively:
    each subset is either skipped or added when incomparable with
    everything chosen so far, so each anti-chain appears exactly once.
    """
    atoms = tuple(sorted(atoms))
    subsets = [
        frozenset(c)
        for size in range(len(atoms) + 1)
        for c in itertools.combinations(atoms, size)
    ]
    found = []
    chosen: list[frozenset[str]] = []

    def extend(i: int) -> None:
        if i == len(subsets):
            found.append(frozenset(chosen))
            return
        extend(i + 1)
        candidate = subsets[i]
        if all(not (candidate <= c or c <= candidate) for c in chosen):
            chosen.append(candidate)
            extend(i + 1)
            chosen.pop()

    extend(0)
    return found


def random_general_program(
    rng: random.Random, n_atoms: int, n_rules: int, max_body: int = 3
) -> Program:
    """Random program mixing polarities, facts included."""
    names = [f"x{i}" for i in range(n_atoms)]
    rules = []
    for _ in range(n_rules):
        head = rng.choice(names)
        body = tuple(
            Literal(rng.choice(names), rng.random() < 0.6)
            for _ in range(rng.randint(0, max_body))
        )
        rules.append(Rule(head, body))
    return Program(tuple(rules))


def rename_atoms(program: Program, mapping: dict[str, str]) -> Program:
    def ren(atom: str) -> str:
        return mapping.get(atom, atom)

    return Program(
        tuple(
            Rule(
                ren(rule.head),
                tuple(Literal(ren(lit.atom), lit.negated) for lit in rule.body),
            )
            for rule in program.rules
        )
    )
