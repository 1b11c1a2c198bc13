import random

import pytest

from aspnf import (
    DependencyGraph,
    Program,
    ReservedAtomError,
    Rule,
    build_dependency_graph,
    build_program,
    enumerate_answer_sets,
    is_purely_negative,
    neg,
    pos,
    well_founded,
)
from conftest import random_general_program


def test_build_program_empty():
    program = build_program([])
    assert len(program) == 0
    assert program.atoms == frozenset()


def test_build_program_pi6(pi6):
    assert len(pi6) == 5
    assert pi6.atoms == {"a", "b", "p", "q"}


def test_build_program_deduplicates_rules():
    rule = Rule("a", (neg("b"),))
    program = build_program([rule, rule])
    assert len(program) == 1


def test_rule_deduplicates_body_literals():
    rule = Rule("a", (neg("b"), neg("b"), pos("c")))
    assert rule.body == (neg("b"), pos("c"))


def test_build_program_rejects_reserved_atoms():
    with pytest.raises(ReservedAtomError):
        build_program([Rule("__x", (neg("a"),))])
    with pytest.raises(ReservedAtomError):
        build_program([Rule("a", (neg("__x"),))])


def test_build_program_rejects_malformed_names():
    with pytest.raises(ValueError):
        build_program([Rule("", ())])
    with pytest.raises(ValueError):
        build_program([Rule("a b", ())])


def test_rebuild_is_idempotent(pi6):
    assert Program(pi6.rules) == pi6
    assert build_program(pi6.rules) == pi6


def test_dependency_graph_pi6(pi6):
    graph = build_dependency_graph(pi6)
    assert graph.vertices == pi6.atoms
    assert graph.edges == {
        ("a", "b", True),
        ("b", "a", True),
        ("p", "p", True),
        ("p", "b", True),
        ("q", "q", True),
        ("q", "a", True),
    }


def test_dependency_graph_empty():
    graph = build_dependency_graph(Program())
    assert graph == DependencyGraph(frozenset(), frozenset())


def test_dependency_graph_single_positive_rule():
    program = build_program([Rule("a", (pos("b"),))])
    graph = build_dependency_graph(program)
    assert graph.edges == {("a", "b", False)}


def test_dependency_graph_rebuild_idempotent(pi6):
    assert build_dependency_graph(pi6) == build_dependency_graph(pi6)


def test_dependency_graph_edge_count_bound():
    rng = random.Random(7)
    for _ in range(30):
        program = random_general_program(rng, 5, 8)
        graph = build_dependency_graph(program)
        assert len(graph.edges) <= sum(len(r.body) for r in program.rules)


def test_is_purely_negative(pi6):
    assert is_purely_negative(pi6)
    assert not is_purely_negative(build_program([Rule("p", (neg("q"), pos("a")))]))
    assert not is_purely_negative(build_program([Rule("p", ())]))


def test_rule_order_does_not_affect_semantics():
    rng = random.Random(11)
    for _ in range(20):
        program = random_general_program(rng, 5, 6)
        rules = list(program.rules)
        rng.shuffle(rules)
        permuted = Program(tuple(rules))
        assert set(enumerate_answer_sets(program)) == set(
            enumerate_answer_sets(permuted)
        )
        assert well_founded(program) == well_founded(permuted)
        assert build_dependency_graph(program) == build_dependency_graph(permuted)
