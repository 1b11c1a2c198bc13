"""Transformations from kernel form into 3-kernel form.

A program is in 3-kernel form when (1) its well-founded model leaves
every atom undefined, (2) every atom is involved in some cycle, (3)
every rule is in a cycle or auxiliary to one, (4) in-cycle rule bodies
have one or two literals, (5) no AND-handle atom lies in its own cycle,
and (6) auxiliary rule bodies have exactly one literal.

Two rewrites get there from kernel form:

* long-rule simplification replaces each too-long negative body with a
  fresh even cycle threaded through the body's conditions, preserving
  the head's truth condition and the negative-path parity to each
  condition;
* bridge simplification deletes a bridge chain and reconnects the
  anchor directly to the target, negated for even chains and positive
  for odd ones. The dropped atoms' truth values are recorded as
  reconstruction formulas over the surviving target atom.

Both return a :class:`TransformTrace` from which ``reconstruct`` maps
answer sets of the transformed program back onto the original
language.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cycles import (
    AND_BRIDGE,
    DEFAULT_MAX_CYCLES,
    OR_BRIDGE,
    Bridge,
    find_bridges,
    find_cycles,
    find_or_handles,
)
from .errors import BridgeNotFoundError, KernelFormError, ReconstructionError
from .kernel import check_kernel
from .model import Program, Rule, is_reserved, neg, pos
from .semantics import well_founded

CONDITION_LABELS = {
    1: "wfs-irreducible",
    2: "every-atom-in-some-cycle",
    3: "every-rule-in-cycle-or-auxiliary",
    4: "cycle-rule-body-at-most-two",
    5: "handle-atom-outside-own-cycle",
    6: "auxiliary-body-exactly-one",
}

NOTE_REROUTES_CYCLE = "reroutes-cycle"
NOTE_CONSTRAINT_GUARD = "constraint-guard"


@dataclass(frozen=True)
class ThreeKernelViolation:
    condition: int
    witness: Rule | str

    @property
    def label(self) -> str:
        return CONDITION_LABELS[self.condition]


@dataclass(frozen=True)
class ThreeKernelReport:
    violations: tuple[ThreeKernelViolation, ...]

    @property
    def is_3kernel(self) -> bool:
        return not self.violations

    def conditions(self) -> frozenset[int]:
        return frozenset(v.condition for v in self.violations)


def check_3kernel(
    program: Program, max_cycles: int = DEFAULT_MAX_CYCLES
) -> ThreeKernelReport:
    """Check all six 3-kernel conditions, reporting every violation."""
    cycles = find_cycles(program, max_cycles)
    in_cycle_atoms: set[str] = set()
    for cycle in cycles:
        in_cycle_atoms.update(cycle.atoms)
    in_cycle_rules = {rule for cycle in cycles for rule in cycle.rules}
    auxiliary = {
        oh.rule
        for cycle in cycles
        for oh in find_or_handles(program, cycle, cycles)
    }

    violations: list[ThreeKernelViolation] = []
    wfs = well_founded(program)
    for atom in sorted(wfs.true_atoms | wfs.false_atoms):
        violations.append(ThreeKernelViolation(1, atom))
    for atom in sorted(program.atoms - in_cycle_atoms):
        violations.append(ThreeKernelViolation(2, atom))
    for rule in program.rules:
        if rule not in in_cycle_rules and rule not in auxiliary:
            violations.append(ThreeKernelViolation(3, rule))
    for rule in program.rules:
        if rule in in_cycle_rules and len(rule.body) > 2:
            violations.append(ThreeKernelViolation(4, rule))
    flagged: set[tuple[Rule, str]] = set()
    for cycle in cycles:
        for i, delta in cycle.and_handles:
            for lit in delta:
                key = (cycle.rules[i], lit.atom)
                if lit.atom in cycle.atoms and key not in flagged:
                    flagged.add(key)
                    violations.append(ThreeKernelViolation(5, cycle.rules[i]))
    for rule in program.rules:
        if rule in auxiliary and len(rule.body) != 1:
            violations.append(ThreeKernelViolation(6, rule))
    return ThreeKernelReport(tuple(violations))


@dataclass(frozen=True)
class ReconstructionFormula:
    """``atom := source`` or ``atom := not source``; the source is
    always a surviving atom, so formulas can be evaluated in any
    order."""

    atom: str
    source: str
    negate: bool

    def __str__(self) -> str:
        return f"{self.atom} := {'not ' if self.negate else ''}{self.source}"


@dataclass(frozen=True)
class TransformStep:
    kind: str
    removed: tuple[Rule, ...]
    added: tuple[Rule, ...]
    fresh_atoms: tuple[str, ...] = ()
    dropped: tuple[ReconstructionFormula, ...] = ()
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class TransformTrace:
    steps: tuple[TransformStep, ...] = ()
    surviving_atoms: frozenset[str] = field(default_factory=frozenset)


def _guard_cycle(conditions: list[str], tag: int) -> tuple[list[Rule], list[str]]:
    """An odd cycle over fresh atoms, one handle per condition.

    The cycle is inconsistent exactly when every condition atom is
    false, and resolves to a unique configuration otherwise, so it
    enforces "at least one condition holds" without touching anything
    else. A plain closing link pads even condition counts to odd cycle
    length.
    """
    count = len(conditions)
    length = count if count % 2 == 1 else count + 1
    atoms = [f"__g{tag}_{i}" for i in range(length)]
    rules = [
        Rule(atoms[i], (neg(atoms[(i + 1) % length]), neg(conditions[i])))
        for i in range(count)
    ]
    if length > count:
        rules.append(Rule(atoms[count], (neg(atoms[0]),)))
    return rules, atoms


def long_rule_simplify(
    program: Program, max_cycles: int = DEFAULT_MAX_CYCLES
) -> tuple[Program, TransformTrace]:
    """Replace every long negative body with a fresh cycle.

    A rule ``h :- not b_1, ..., not b_j`` is long when it is auxiliary
    to a cycle with ``j > 1`` or in a cycle with ``j > 2``. It is
    replaced, in place, by ``2*j + 2`` rules over ``2*j + 1`` fresh
    atoms::

        h      :- not f_1.
        f_1    :- not f_2.
        f_2    :- not f_3, not b_1.
        f_3    :- not f_4.
        f_4    :- not f_5, not b_2.
        ...
        f_2j   :- not f_2j+1, not b_j.
        f_2j+1 :- not h.

    The chain preserves the support condition for ``h`` (the rule can
    fire for ``h`` exactly when every ``b_i`` is false) but, being an
    even cycle, it no longer rejects interpretations where ``h`` is
    false although every ``b_i`` is: the replaced rule would have fired
    there. Unless the program keeps a bare self-loop ``h :- not h``
    (which already forces ``h`` true everywhere), that constraint is
    restored by a guard: an odd cycle with one handle per atom of
    ``{h, b_1, ..., b_j}``, inconsistent exactly when all of them are
    false. Guard rules are flagged in the trace.

    Fresh atoms are unique per replaced rule. The result is equivalent
    to the input modulo projection over its atoms. Requires kernel
    form.
    """
    report = check_kernel(program)
    if not report.is_kernel:
        raise KernelFormError(
            "long_rule_simplify requires kernel form; violations: "
            + ", ".join(v.condition for v in report.violations)
        )
    cycles = find_cycles(program, max_cycles)
    in_cycle_rules = {rule for cycle in cycles for rule in cycle.rules}
    auxiliary = {
        oh.rule
        for cycle in cycles
        for oh in find_or_handles(program, cycle, cycles)
    }

    out: list[Rule] = []
    steps: list[TransformStep] = []
    counter = 0
    for rule in program.rules:
        j = len(rule.body)
        long_auxiliary = rule in auxiliary and j > 1
        long_in_cycle = rule in in_cycle_rules and j > 2
        if not (long_auxiliary or long_in_cycle):
            out.append(rule)
            continue
        conditions = [lit.atom for lit in rule.body]  # all negative in kernel form
        fresh = [f"__h{counter}_{i}" for i in range(1, 2 * j + 2)]
        added = [Rule(rule.head, (neg(fresh[0]),))]
        for i, condition in enumerate(conditions, start=1):
            added.append(Rule(fresh[2 * i - 2], (neg(fresh[2 * i - 1]),)))
            added.append(
                Rule(fresh[2 * i - 1], (neg(fresh[2 * i]), neg(condition)))
            )
        added.append(Rule(fresh[2 * j], (neg(rule.head),)))
        notes = [NOTE_REROUTES_CYCLE] if long_in_cycle else []
        if Rule(rule.head, (neg(rule.head),)) not in program.rules:
            guard_conditions = [rule.head]
            guard_conditions += [b for b in conditions if b != rule.head]
            guard_rules, guard_atoms = _guard_cycle(guard_conditions, counter)
            added.extend(guard_rules)
            fresh.extend(guard_atoms)
            notes.append(NOTE_CONSTRAINT_GUARD)
        counter += 1
        out.extend(added)
        steps.append(
            TransformStep(
                kind="long-rule",
                removed=(rule,),
                added=tuple(added),
                fresh_atoms=tuple(fresh),
                notes=tuple(notes),
            )
        )
    result = Program(tuple(out))
    return result, TransformTrace(tuple(steps), result.atoms)


def _chain_formulas(bridge: Bridge) -> tuple[ReconstructionFormula, ...]:
    # chain atom i (1-based) equals the target under n - i + 1 negations
    n = bridge.length
    formulas = []
    for i in range(n, 0, -1):
        atom = bridge.chain_atoms[i - 1]
        negate = (n - i + 1) % 2 == 1
        formulas.append(ReconstructionFormula(atom, bridge.target_atom, negate))
    return tuple(formulas)


def _require_bridge(program: Program, bridge: Bridge, kind: str) -> None:
    if bridge.kind != kind:
        raise ValueError(f"expected an {kind} bridge, got {bridge.kind}")
    missing = [
        rule
        for rule in (bridge.anchor_rule, *bridge.chain)
        if rule not in program.rules
    ]
    if missing:
        raise BridgeNotFoundError(
            f"bridge rules not present in program: {missing[0]}"
        )


def simplify_or_bridge(
    program: Program, bridge: Bridge
) -> tuple[Program, TransformTrace]:
    """Remove an OR bridge: the chain and its auxiliary anchor rule are
    replaced by a direct handle on the target, ``p :- not a`` for even
    chains and ``p :- a`` for odd ones."""
    _require_bridge(program, bridge, OR_BRIDGE)
    literal = neg(bridge.target_atom) if bridge.is_even else pos(bridge.target_atom)
    replacement = Rule(bridge.anchor_atom, (literal,))
    removed = (bridge.anchor_rule, *bridge.chain)
    out: list[Rule] = []
    for rule in program.rules:
        if rule == bridge.anchor_rule:
            out.append(replacement)
        elif rule not in removed:
            out.append(rule)
    kind = "or-bridge-even" if bridge.is_even else "or-bridge-odd"
    result = Program(tuple(out))
    step = TransformStep(
        kind=kind,
        removed=removed,
        added=(replacement,),
        dropped=_chain_formulas(bridge),
    )
    return result, TransformTrace((step,), result.atoms)


def simplify_and_bridge(
    program: Program, bridge: Bridge
) -> tuple[Program, TransformTrace]:
    """Remove an AND bridge: the chain is deleted and the anchor cycle
    rule's handle literal is rewritten to the target, ``not a`` for even
    chains and positive ``a`` for odd ones."""
    _require_bridge(program, bridge, AND_BRIDGE)
    first = neg(bridge.chain_atoms[0])
    literal = neg(bridge.target_atom) if bridge.is_even else pos(bridge.target_atom)
    replacement = Rule(
        bridge.anchor_rule.head,
        tuple(literal if lit == first else lit for lit in bridge.anchor_rule.body),
    )
    removed = (bridge.anchor_rule, *bridge.chain)
    out: list[Rule] = []
    for rule in program.rules:
        if rule == bridge.anchor_rule:
            out.append(replacement)
        elif rule not in removed:
            out.append(rule)
    kind = "and-bridge-even" if bridge.is_even else "and-bridge-odd"
    result = Program(tuple(out))
    step = TransformStep(
        kind=kind,
        removed=removed,
        added=(replacement,),
        dropped=_chain_formulas(bridge),
    )
    return result, TransformTrace((step,), result.atoms)


def three_kernelize(
    program: Program, max_cycles: int = DEFAULT_MAX_CYCLES
) -> tuple[Program, TransformTrace]:
    """Long-rule simplification once, then bridge simplification to a
    fixpoint. Requires kernel form.

    Bridges are simplified in deterministic order (anchor atom, then
    target atom), re-detecting after every step. The answer sets of the
    result correspond to the input's over the surviving atoms;
    ``reconstruct`` recovers full original answer sets. Residual
    structure that the rewrites cannot reach is reported by
    ``check_3kernel`` rather than asserted away.
    """
    result, trace = long_rule_simplify(program, max_cycles)
    steps = list(trace.steps)
    while True:
        bridges = find_bridges(result, max_cycles=max_cycles)
        if not bridges:
            break
        bridge = bridges[0]
        simplify = (
            simplify_or_bridge if bridge.kind == OR_BRIDGE else simplify_and_bridge
        )
        result, step_trace = simplify(result, bridge)
        steps.extend(step_trace.steps)
    return result, TransformTrace(tuple(steps), result.atoms)


def reconstruct(
    interpretation: Iterable[str], trace: TransformTrace
) -> frozenset[str]:
    """Map an answer set of the transformed program back to the
    original language: drop ``__`` atoms, then re-add each dropped
    bridge atom according to its reconstruction formula."""
    s = frozenset(interpretation)
    result = {atom for atom in s if not is_reserved(atom)}
    for step in trace.steps:
        for formula in step.dropped:
            if formula.source not in s and formula.source not in trace.surviving_atoms:
                raise ReconstructionError(
                    f"formula {formula} references an atom that is neither "
                    f"in the answer set nor in the surviving universe"
                )
            value = formula.source in s
            if formula.negate:
                value = not value
            if value:
                result.add(formula.atom)
    return frozenset(result)


def trace_to_dict(trace: TransformTrace) -> dict:
    """Trace as a JSON-serializable document."""
    return {
        "steps": [
            {
                "kind": step.kind,
                "removed": [str(rule) for rule in step.removed],
                "added": [str(rule) for rule in step.added],
                "fresh_atoms": list(step.fresh_atoms),
                "dropped": [str(formula) for formula in step.dropped],
                "notes": list(step.notes),
            }
            for step in trace.steps
        ],
        "surviving_atoms": sorted(trace.surviving_atoms),
    }
