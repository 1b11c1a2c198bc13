"""Ground normal logic programs and their dependency structure.

Atoms are plain strings; predicate-style names such as ``color(0,red)``
are opaque, there is no term structure. Rules and programs are immutable
values, and every operation in this package is a pure function over
them, so they are safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ReservedAtomError

#: Prefix of atoms introduced by transformations; rejected in user input.
RESERVED_PREFIX = "__"

_NAME_RE = re.compile(r"[A-Za-z0-9_(),]+\Z")


def is_reserved(atom: str) -> bool:
    """True for atoms generated by this package (``__`` prefix)."""
    return atom.startswith(RESERVED_PREFIX)


@dataclass(frozen=True, order=True)
class Literal:
    """A positive or negated ("not") occurrence of an atom in a rule body."""

    atom: str
    negated: bool = False

    def __str__(self) -> str:
        return f"not {self.atom}" if self.negated else self.atom


def pos(atom: str) -> Literal:
    return Literal(atom, False)


def neg(atom: str) -> Literal:
    return Literal(atom, True)


@dataclass(frozen=True, order=True)
class Rule:
    """A rule ``head :- body`` whose body may be empty (a fact).

    Duplicate body literals are dropped on construction, keeping the
    first occurrence; body order is otherwise preserved.
    """

    head: str
    body: tuple[Literal, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "body", tuple(dict.fromkeys(self.body)))

    @property
    def is_fact(self) -> bool:
        return not self.body

    @property
    def body_atoms(self) -> frozenset[str]:
        return frozenset(lit.atom for lit in self.body)

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.body))}."


@dataclass(frozen=True)
class Program:
    """An ordered, duplicate-free sequence of rules.

    Rule order is preserved for printing only; no semantic or structural
    result may depend on it.
    """

    rules: tuple[Rule, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(dict.fromkeys(self.rules)))

    @cached_property
    def atoms(self) -> frozenset[str]:
        collected: set[str] = set()
        for rule in self.rules:
            collected.add(rule.head)
            collected.update(rule.body_atoms)
        return frozenset(collected)

    def rules_for(self, atom: str) -> tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.head == atom)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)


def build_program(rules: Iterable[Rule]) -> Program:
    """Validate user-supplied rules and assemble a :class:`Program`.

    Rejects atoms with the reserved ``__`` prefix and malformed atom
    names. Duplicate rules and duplicate body literals are silently
    dropped.
    """
    rules = tuple(rules)
    for rule in rules:
        _check_atom(rule.head)
        for lit in rule.body:
            _check_atom(lit.atom)
    return Program(rules)


def _check_atom(name: str) -> None:
    if is_reserved(name):
        raise ReservedAtomError(
            f"atom {name!r} uses the reserved prefix {RESERVED_PREFIX!r}"
        )
    if not _NAME_RE.match(name):
        raise ValueError(f"malformed atom name: {name!r}")


@dataclass(frozen=True)
class DependencyGraph:
    """Atom-level dependencies: one edge per (head, body atom, polarity)."""

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str, bool]]  # (from, to, negated)

    def negative_edges(self) -> frozenset[tuple[str, str]]:
        return frozenset((a, b) for a, b, negated in self.edges if negated)


def build_dependency_graph(program: Program) -> DependencyGraph:
    edges: set[tuple[str, str, bool]] = set()
    for rule in program.rules:
        for lit in rule.body:
            edges.add((rule.head, lit.atom, lit.negated))
    return DependencyGraph(program.atoms, frozenset(edges))


def is_purely_negative(program: Program) -> bool:
    """True iff no rule is a fact and every body literal is negated."""
    return all(
        rule.body and all(lit.negated for lit in rule.body)
        for rule in program.rules
    )
