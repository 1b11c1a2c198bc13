"""Cycle detection, handle extraction, rule classification, and bridges.

A cycle is a set of rules ``x1 :- not x2, D1. ... xn :- not x1, Dn.``
over distinct atoms; each extra conjunction ``Di`` (which may not
mention the rule's own head) is an AND handle. A rule whose head lies
in a cycle but which does not itself belong to any cycle is auxiliary
to that cycle, and its body is an OR handle. ``n == 1`` is a self-loop.

A bridge is a chain of single-condition negative rules hanging off a
handle and ending at an atom defined in some other cycle. Bridges are
only recognized under side conditions that make their atom values fully
determined by the target atom: every intermediate atom must have
exactly one defining rule and occur in exactly one rule body.
Chains that violate the side conditions are left unclassified rather
than being eliminated unsoundly.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass

from .errors import CycleCapExceededError
from .model import Literal, Program, Rule, neg

#: Default cap on the number of enumerated cycles (they may overlap,
#: and witness combinations multiply).
DEFAULT_MAX_CYCLES = 10_000

TAG_IN_CYCLE = "in-cycle"
TAG_AUXILIARY = "auxiliary"
TAG_BRIDGE_STEP = "bridge-step"
TAG_UNCLASSIFIED = "unclassified"

OR_BRIDGE = "OR"
AND_BRIDGE = "AND"


@dataclass(frozen=True)
class Cycle:
    """A negative cycle: ``rules[i]`` has head ``atoms[i]`` and steps to
    ``atoms[(i+1) % n]``. Canonicalized to start at the least atom."""

    atoms: tuple[str, ...]
    rules: tuple[Rule, ...]

    def __post_init__(self) -> None:
        n = len(self.atoms)
        if n == 0 or n != len(self.rules):
            raise ValueError("cycle needs one rule per atom")
        if len(set(self.atoms)) != n:
            raise ValueError("cycle atoms must be distinct")
        for i, rule in enumerate(self.rules):
            if rule.head != self.atoms[i]:
                raise ValueError(f"rule {rule} does not define {self.atoms[i]}")
            if neg(self.atoms[(i + 1) % n]) not in rule.body:
                raise ValueError(f"rule {rule} is not a step of {self.atoms}")
            if any(lit.atom == rule.head for lit in self.handle(i)):
                raise ValueError(f"handle of {rule} mentions its own head")

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def is_even(self) -> bool:
        return self.size % 2 == 0

    def handle(self, i: int) -> tuple[Literal, ...]:
        """AND handle at position ``i`` (possibly empty)."""
        step = neg(self.atoms[(i + 1) % self.size])
        return tuple(lit for lit in self.rules[i].body if lit != step)

    @property
    def and_handles(self) -> tuple[tuple[int, tuple[Literal, ...]], ...]:
        """Positions with a non-empty AND handle."""
        out = []
        for i in range(self.size):
            delta = self.handle(i)
            if delta:
                out.append((i, delta))
        return tuple(out)


@dataclass(frozen=True)
class OrHandle:
    """An auxiliary rule ``target :- handle`` of a cycle."""

    cycle: Cycle
    target: str
    rule: Rule

    @property
    def handle(self) -> tuple[Literal, ...]:
        return self.rule.body


@dataclass(frozen=True)
class Bridge:
    """A handle chain from ``anchor_atom`` (in ``anchor_cycle``) to
    ``target_atom`` (in another cycle). ``chain[i]`` defines the i-th
    intermediate atom; parity counts the intermediates."""

    kind: str  # OR_BRIDGE or AND_BRIDGE
    anchor_cycle: Cycle
    anchor_atom: str
    anchor_rule: Rule
    chain: tuple[Rule, ...]
    target_atom: str

    def __post_init__(self) -> None:
        if self.kind not in (OR_BRIDGE, AND_BRIDGE):
            raise ValueError(f"unknown bridge kind {self.kind!r}")
        if not self.chain:
            raise ValueError("bridge chain may not be empty")

    @property
    def chain_atoms(self) -> tuple[str, ...]:
        return tuple(rule.head for rule in self.chain)

    @property
    def length(self) -> int:
        return len(self.chain)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0


@dataclass(frozen=True)
class RuleClassification:
    """Map from each rule to its structural tags."""

    tags: dict[Rule, frozenset[str]]

    def rules_tagged(self, tag: str) -> tuple[Rule, ...]:
        return tuple(rule for rule, tags in self.tags.items() if tag in tags)


def find_cycles(
    program: Program, max_cycles: int = DEFAULT_MAX_CYCLES
) -> tuple[Cycle, ...]:
    """Every cycle of the program, each simple negative atom cycle once
    (canonical start at its least atom) for every combination of
    witnessing rules. Overlapping cycles are all reported.

    Raises :class:`CycleCapExceededError` past ``max_cycles``.
    """
    witnesses: dict[tuple[str, str], list[Rule]] = defaultdict(list)
    for rule in program.rules:
        for lit in rule.body:
            if not lit.negated:
                continue
            # the rest of the body must not mention the rule's own head
            if any(o.atom == rule.head for o in rule.body if o != lit):
                continue
            witnesses[rule.head, lit.atom].append(rule)
    adjacency: dict[str, list[str]] = defaultdict(list)
    for source, target in witnesses:
        adjacency[source].append(target)
    for neighbors in adjacency.values():
        neighbors.sort()

    cycles: list[Cycle] = []

    def emit(atom_cycle: list[str]) -> None:
        n = len(atom_cycle)
        options = [
            witnesses[atom_cycle[i], atom_cycle[(i + 1) % n]] for i in range(n)
        ]
        for combo in itertools.product(*options):
            if len(cycles) >= max_cycles:
                raise CycleCapExceededError(
                    f"more than {max_cycles} cycles; raise max_cycles to proceed"
                )
            cycles.append(Cycle(tuple(atom_cycle), tuple(combo)))

    def extend(start: str, path: list[str], on_path: set[str]) -> None:
        for successor in adjacency.get(path[-1], ()):
            if successor == start:
                emit(path)
            elif successor > start and successor not in on_path:
                path.append(successor)
                on_path.add(successor)
                extend(start, path, on_path)
                path.pop()
                on_path.remove(successor)

    for start in sorted(program.atoms):
        extend(start, [start], {start})
    cycles.sort(key=lambda c: (c.size, c.atoms))
    return tuple(cycles)


def find_or_handles(
    program: Program, cycle: Cycle, cycles: tuple[Cycle, ...] | None = None
) -> tuple[OrHandle, ...]:
    """Auxiliary rules of ``cycle``: rules with a head among its atoms
    that belong to no cycle at all, have a non-empty body, and do not
    mention their own head. Pass ``cycles`` to reuse a prior
    ``find_cycles`` result."""
    if cycles is None:
        cycles = find_cycles(program)
    in_cycle_rules = {rule for c in cycles for rule in c.rules}
    found = []
    for rule in program.rules:
        if rule.head not in cycle.atoms or rule in in_cycle_rules:
            continue
        if not rule.body or any(lit.atom == rule.head for lit in rule.body):
            continue
        found.append(OrHandle(cycle=cycle, target=rule.head, rule=rule))
    return tuple(found)


def find_bridges(
    program: Program,
    cycles: tuple[Cycle, ...] | None = None,
    max_cycles: int = DEFAULT_MAX_CYCLES,
) -> tuple[Bridge, ...]:
    """All maximal handle chains satisfying the bridge side conditions,
    ordered by (anchor atom, target atom, chain atoms)."""
    if cycles is None:
        cycles = find_cycles(program, max_cycles)
    in_cycle_atoms: set[str] = set()
    for c in cycles:
        in_cycle_atoms.update(c.atoms)
    defining: dict[str, list[Rule]] = defaultdict(list)
    body_count: Counter[str] = Counter()
    for rule in program.rules:
        defining[rule.head].append(rule)
        for lit in rule.body:
            body_count[lit.atom] += 1

    def walk(first: str) -> tuple[tuple[Rule, ...], str] | None:
        chain: list[Rule] = []
        seen: set[str] = set()
        current = first
        while True:
            if current in seen or body_count[current] != 1:
                return None
            seen.add(current)
            defs = defining.get(current, [])
            if len(defs) != 1:
                return None
            rule = defs[0]
            if len(rule.body) != 1 or not rule.body[0].negated:
                return None
            chain.append(rule)
            successor = rule.body[0].atom
            if successor in in_cycle_atoms:
                return tuple(chain), successor
            current = successor

    bridges: list[Bridge] = []
    seen_keys: set[tuple] = set()

    def consider(kind: str, cycle: Cycle, anchor_rule: Rule, first: str) -> None:
        hit = walk(first)
        if hit is None:
            return
        chain, target = hit
        if not any(target in c.atoms and c != cycle for c in cycles):
            return
        key = (kind, anchor_rule, chain)
        if key in seen_keys:
            return
        seen_keys.add(key)
        bridges.append(
            Bridge(kind, cycle, anchor_rule.head, anchor_rule, chain, target)
        )

    for cycle in cycles:
        for or_handle in find_or_handles(program, cycle, cycles):
            body = or_handle.rule.body
            if (
                len(body) == 1
                and body[0].negated
                and body[0].atom not in in_cycle_atoms
            ):
                consider(OR_BRIDGE, cycle, or_handle.rule, body[0].atom)
        for i, delta in cycle.and_handles:
            if (
                len(delta) == 1
                and delta[0].negated
                and delta[0].atom not in in_cycle_atoms
            ):
                consider(AND_BRIDGE, cycle, cycle.rules[i], delta[0].atom)

    bridges.sort(key=lambda b: (b.anchor_atom, b.target_atom, b.chain_atoms))
    return tuple(bridges)


def classify_rules(
    program: Program, max_cycles: int = DEFAULT_MAX_CYCLES
) -> RuleClassification:
    """Tag every rule: in-cycle, auxiliary, bridge-step, or unclassified."""
    cycles = find_cycles(program, max_cycles)
    in_cycle = {rule for c in cycles for rule in c.rules}
    auxiliary = {
        oh.rule for c in cycles for oh in find_or_handles(program, c, cycles)
    }
    bridge_steps = {
        rule for bridge in find_bridges(program, cycles) for rule in bridge.chain
    }
    tags: dict[Rule, frozenset[str]] = {}
    for rule in program.rules:
        assigned = set()
        if rule in in_cycle:
            assigned.add(TAG_IN_CYCLE)
        if rule in auxiliary:
            assigned.add(TAG_AUXILIARY)
        if rule in bridge_steps:
            assigned.add(TAG_BRIDGE_STEP)
        if not assigned:
            assigned.add(TAG_UNCLASSIFIED)
        tags[rule] = frozenset(assigned)
    return RuleClassification(tags)


def analysis_to_dict(program: Program, max_cycles: int = DEFAULT_MAX_CYCLES) -> dict:
    """Cycle/handle/bridge report as a JSON-serializable document."""
    cycles = find_cycles(program, max_cycles)
    report: dict = {"cycles": [], "bridges": []}
    for cycle in cycles:
        report["cycles"].append(
            {
                "kind": "cycle",
                "atoms": list(cycle.atoms),
                "length": cycle.size,
                "parity": "even" if cycle.is_even else "odd",
                "handles": [
                    {
                        "kind": "and-handle",
                        "atom": cycle.atoms[i],
                        "literals": [str(lit) for lit in delta],
                    }
                    for i, delta in cycle.and_handles
                ]
                + [
                    {
                        "kind": "or-handle",
                        "atom": oh.target,
                        "literals": [str(lit) for lit in oh.handle],
                    }
                    for oh in find_or_handles(program, cycle, cycles)
                ],
                "rules": [str(rule) for rule in cycle.rules],
            }
        )
    for bridge in find_bridges(program, cycles):
        report["bridges"].append(
            {
                "kind": "or-bridge" if bridge.kind == OR_BRIDGE else "and-bridge",
                "atoms": list(bridge.chain_atoms),
                "length": bridge.length,
                "parity": "even" if bridge.is_even else "odd",
                "anchor": bridge.anchor_atom,
                "target": bridge.target_atom,
                "rules": [str(rule) for rule in bridge.chain],
            }
        )
    return report


def export_analysis_dot(
    program: Program, max_cycles: int = DEFAULT_MAX_CYCLES
) -> str:
    """DOT rendering with one cluster per cycle.

    An atom in several cycles is drawn inside the first one only (DOT
    clusters cannot share nodes); all dependency edges are drawn.
    """
    from .model import build_dependency_graph

    def quote(name: str) -> str:
        return '"' + name.replace('"', '\\"') + '"'

    cycles = find_cycles(program, max_cycles)
    graph = build_dependency_graph(program)
    placed: set[str] = set()
    lines = ["digraph G {\n"]
    for number, cycle in enumerate(cycles):
        fresh = [a for a in cycle.atoms if a not in placed]
        if not fresh:
            continue
        lines.append(f"  subgraph cluster_{number} {{\n")
        lines.append(f'    label="cycle {number}";\n')
        for atom in fresh:
            lines.append(f"    {quote(atom)};\n")
            placed.add(atom)
        lines.append("  }\n")
    for atom in sorted(graph.vertices - placed):
        lines.append(f"  {quote(atom)};\n")
    for source, target, negated in sorted(graph.edges):
        style = " [style=dashed]" if negated else ""
        lines.append(f"  {quote(source)} -> {quote(target)}{style};\n")
    lines.append("}\n")
    return "".join(lines)
