"""Argument construction and grounded semantics.

This module rebuilds the zero-superiority fragment of the inference
engine by a completely different route: enumerate every argument (a
finite proof tree whose leaves are facts and whose inner nodes apply
rules, with no rule repeated along a branch), let arguments attack each
other on conclusions, and take the grounded extension.  Agreement of
the two routes on the ambiguity-propagating tags is a strong check that
neither is wrong, which is the whole point: keep this code free of any
shared machinery with the fixpoint engine.

Superiority is honoured when present (an attack on a node is blocked if
the node's rule beats the attacker's top rule), but the equivalence
report only vouches for theories without superiority and without
support cycles.  Outside that territory the two routes legitimately
differ: under superiority the correspondence with the proof conditions
is inexact in general, and on cyclic support a literal can lack any
finite argument while the engine's refutation of it never bottoms out,
leaving a conclusion justified here yet undetermined there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .engine import compute_conclusions
from .model import DELTA, PROVED, DefeasibleTheory, Literal

FACT = "FACT"


@dataclass(frozen=True)
class Argument:
    """A proof tree: ``top_rule`` is FACT for leaves, else a rule id,
    and ``subarguments`` prove its antecedents in order."""

    conclusion: tuple[str, Literal]
    top_rule: str
    subarguments: tuple["Argument", ...] = ()
    rule_ids: frozenset[str] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        ids = set()
        if self.top_rule != FACT:
            ids.add(self.top_rule)
        for sub in self.subarguments:
            ids |= sub.rule_ids
        object.__setattr__(self, "rule_ids", frozenset(ids))

    @property
    def is_fact(self) -> bool:
        return self.top_rule == FACT

    def nodes(self) -> Iterable["Argument"]:
        yield self
        for sub in self.subarguments:
            yield from sub.nodes()

    def __str__(self) -> str:
        mode, literal = self.conclusion
        if self.is_fact:
            return f"[{mode} {literal}]"
        subs = ", ".join(str(sub) for sub in self.subarguments)
        return f"[{mode} {literal} by {self.top_rule}({subs})]"


def build_arguments(theory: DefeasibleTheory,
                    limit: int = 20000) -> tuple[Argument, ...]:
    """All arguments of the theory, built to a least fixpoint.

    Annotated antecedents mix proof tags into rule bodies and have no
    argument-level counterpart, so they are rejected outright."""
    for rule in theory.rules:
        for ant in rule.antecedents:
            if ant.annotated:
                raise ValueError(
                    f"rule {rule.id!r} has an annotated antecedent; "
                    "arguments are only defined for plain theories")
    by_conclusion: dict[tuple[str, Literal], list[Argument]] = {}
    seen: set[Argument] = set()

    def add(argument: Argument) -> bool:
        if argument in seen:
            return False
        seen.add(argument)
        by_conclusion.setdefault(argument.conclusion, []).append(argument)
        if len(seen) > limit:
            raise ValueError(
                f"argument explosion: more than {limit} arguments")
        return True

    for mode, literal in theory.facts:
        add(Argument((mode, literal), FACT))
    changed = True
    while changed:
        changed = False
        for rule in theory.rules:
            pools = [
                by_conclusion.get((ant.mode, ant.literal), [])
                for ant in rule.antecedents
            ]
            if any(not pool for pool in pools):
                continue
            for combo in product(*pools):
                used = frozenset().union(*(sub.rule_ids for sub in combo))
                if rule.id in used:
                    continue
                argument = Argument(
                    (rule.head_mode, rule.head), rule.id, tuple(combo))
                if add(argument):
                    changed = True
    return tuple(sorted(seen, key=str))


@dataclass(frozen=True)
class AttackGraph:
    arguments: tuple[Argument, ...]
    attacks: frozenset[tuple[int, int]]

    def attackers_of(self, index: int) -> frozenset[int]:
        return frozenset(a for a, b in self.attacks if b == index)


def build_attack_graph(theory: DefeasibleTheory,
                       arguments: Optional[tuple[Argument, ...]] = None
                       ) -> AttackGraph:
    """Attacks on conclusions: A attacks B when A concludes the
    complement of some non-fact node of B in the same mode, unless that
    node's rule beats A's own top rule.  Fact leaves are unattackable."""
    if arguments is None:
        arguments = build_arguments(theory)
    superiority = theory.superiority
    vulnerable: list[list[tuple[tuple[str, Literal], str]]] = []
    for argument in arguments:
        spots = []
        for node in argument.nodes():
            if not node.is_fact:
                mode, literal = node.conclusion
                spots.append(((mode, literal.complement()), node.top_rule))
        vulnerable.append(spots)
    attacks = set()
    for a_index, attacker in enumerate(arguments):
        for b_index, spots in enumerate(vulnerable):
            for wanted, node_rule in spots:
                if attacker.conclusion != wanted:
                    continue
                if (node_rule, attacker.top_rule) in superiority:
                    continue
                attacks.add((a_index, b_index))
                break
    return AttackGraph(arguments, frozenset(attacks))


def grounded_extension(graph: AttackGraph) -> frozenset[Argument]:
    """Least fixpoint of the defence function: start from the
    unattacked arguments and keep adding everything they defend."""
    attackers = [graph.attackers_of(i) for i in range(len(graph.arguments))]
    accepted: set[int] = set()
    changed = True
    while changed:
        changed = False
        for index in range(len(graph.arguments)):
            if index in accepted:
                continue
            if all(
                any((defender, attacker) in graph.attacks
                    for defender in accepted)
                for attacker in attackers[index]
            ):
                accepted.add(index)
                changed = True
    return frozenset(graph.arguments[i] for i in accepted)


def has_support_cycle(theory: DefeasibleTheory) -> bool:
    """True when some chain of rules can feed its own head.

    Checked on the (mode, atom) graph of heads over antecedents; atoms
    rather than literals because refuting a literal means exhausting the
    rules for it and the rules against it alike.  On a cycle the
    engine's failure proofs may never bottom out even where only
    infinitely deep proof trees exist, so finite arguments can be
    justified while the fixpoint stays undetermined."""
    edges: dict[tuple[str, str], set[tuple[str, str]]] = {}
    for rule in theory.rules:
        source = (rule.head_mode, rule.head.atom)
        for ant in rule.antecedents:
            edges.setdefault(source, set()).add((ant.mode, ant.literal.atom))
    ENTERED, DONE = 1, 2
    state: dict[tuple[str, str], int] = {}
    for start in edges:
        if state.get(start):
            continue
        state[start] = ENTERED
        stack = [(start, iter(edges[start]))]
        while stack:
            node, children = stack[-1]
            child = next(children, None)
            if child is None:
                state[node] = DONE
                stack.pop()
            elif state.get(child, 0) == ENTERED:
                return True
            elif child not in state:
                state[child] = ENTERED
                stack.append((child, iter(edges.get(child, ()))))
    return False


@dataclass(frozen=True)
class EquivalenceReport:
    """Where the fixpoint engine and grounded semantics disagree on the
    ambiguity-propagating tag.  ``caveats`` lists the features that put
    the theory outside the territory where the two routes provably
    coincide; while any caveat stands the report is not authoritative
    and a discrepancy is not evidence of a bug."""

    discrepancies: tuple[tuple[str, Literal, str, bool], ...]
    checked: int
    caveats: tuple[str, ...] = ()

    @property
    def authoritative(self) -> bool:
        return not self.caveats

    @property
    def agrees(self) -> bool:
        return not self.discrepancies


def delta_equivalence_check(theory: DefeasibleTheory,
                            limit: int = 20000) -> EquivalenceReport:
    """Compare the engine's ambiguity-propagating tag with grounded
    justification over every (mode, literal) the engine knows about."""
    arguments = build_arguments(theory, limit)
    graph = build_attack_graph(theory, arguments)
    justified = {arg.conclusion for arg in grounded_extension(graph)}
    table = compute_conclusions(theory)
    discrepancies = []
    checked = 0
    for literal in sorted(table.literals):
        for mode in ("E", "O"):
            checked += 1
            engine_status = table.status(DELTA, mode, literal)
            in_extension = (mode, literal) in justified
            if (engine_status == PROVED) != in_extension:
                discrepancies.append(
                    (mode, literal, engine_status, in_extension))
    caveats = []
    if theory.superiority:
        caveats.append("superiority")
    if has_support_cycle(theory):
        caveats.append("support cycles")
    return EquivalenceReport(tuple(discrepancies), checked, tuple(caveats))
