"""Tagged-conclusion inference for defeasible deontic theories.

Conclusions come in four positive tags of decreasing strength and four
matching negative tags:

* delta: provable even when every competing chain of support is granted
  its full force; ambiguity anywhere upstream propagates and defeats it.
* partial: provable once competing support is itself required to win its
  own conflicts; ambiguity blocks the attacker instead of spreading.
* sigma: supported by an applicable rule that is not beaten by a
  stronger rule whose premises are delta-discarded-free.
* sigma_minus: supported by a chain of applicable rules, conflicts and
  superiority ignored.

Negative tags are the constructive strong negations of the positive
conditions, derived in the same fixpoint rather than by failure.  A
query can therefore come back undetermined: circular support such as
``p => p`` settles neither ``+partial p`` nor ``-partial p``.

Proof standards map onto the tags: scintilla of evidence is
sigma_minus, substantial evidence (clear and convincing) is sigma,
preponderance is partial, beyond reasonable doubt is delta, and
dialectical validity is delta computed with the superiority relation
stripped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .model import (
    DELTA, EVIDENTIAL, MINUS, MODES, OBLIGATION, PARTIAL, PLUS, PROVED,
    REFUTED, SIGMA, SIGMA_MINUS, TAGS, UNDETERMINED, Antecedent,
    DefeasibleTheory, Literal, TaggedLiteral, literal_sort_key,
)

# Proof standard names.
SCINTILLA = "scintilla"
SUBSTANTIAL = "substantial"
PREPONDERANCE = "preponderance"
BRD = "brd"
DIALECTICAL_VALIDITY = "dialectical_validity"
STANDARDS = (SCINTILLA, SUBSTANTIAL, PREPONDERANCE, BRD, DIALECTICAL_VALIDITY)

# The tag each standard tests (dialectical validity also strips superiority).
STANDARD_TAG = {
    SCINTILLA: SIGMA_MINUS,
    SUBSTANTIAL: SIGMA,
    PREPONDERANCE: PARTIAL,
    BRD: DELTA,
    DIALECTICAL_VALIDITY: DELTA,
}

_TAG_INDEX = {tag: i for i, tag in enumerate(TAGS)}
_POS_RANK = {DELTA: 0, PARTIAL: 1, SIGMA: 2, SIGMA_MINUS: 3}
_NEG_RANK = {SIGMA_MINUS: 0, SIGMA: 1, PARTIAL: 2, DELTA: 3}


class CoherenceError(RuntimeError):
    """Both a positive tag and its negation became derivable.

    Structurally impossible for these inference conditions; raising
    instead of picking a side keeps any future regression loud.
    """


class ConclusionTable:
    """Status of every tagged, moded literal of a theory.

    Literals outside the table's universe answer as refuted: a literal
    no rule or fact mentions has every negative tag vacuously derivable.
    """

    __slots__ = ("_statuses", "literals")

    def __init__(self, statuses: dict, literals: frozenset[Literal]):
        self._statuses = statuses
        self.literals = literals

    def status(self, tag: str, mode: str, literal: Literal) -> str:
        if literal not in self.literals:
            return REFUTED
        return self._statuses.get((tag, mode, literal), UNDETERMINED)

    def derived(self, sign: str, tag: str, mode: str, literal: Literal) -> bool:
        wanted = PROVED if sign == PLUS else REFUTED
        return self.status(tag, mode, literal) == wanted

    def query(self, q: TaggedLiteral) -> str:
        """Status of a signed query: proved when exactly the asked
        conclusion was derived, refuted when its opposite sign was."""
        status = self.status(q.tag, q.mode, q.literal)
        if status == UNDETERMINED:
            return UNDETERMINED
        if q.sign == PLUS:
            return PROVED if status == PROVED else REFUTED
        return PROVED if status == REFUTED else REFUTED

    def is_determined(self, literal: Literal) -> bool:
        """Whether the literal has any determined status in any mode."""
        if literal not in self.literals:
            return True
        return any(
            (tag, mode, literal) in self._statuses
            for tag in TAGS for mode in MODES)

    def rows(self) -> list[tuple[Literal, str, str, str]]:
        out = []
        for literal in sorted(self.literals, key=literal_sort_key):
            for mode in MODES:
                for tag in TAGS:
                    out.append((literal, mode, tag,
                                self.status(tag, mode, literal)))
        return out

    def newly_determined(self, old: "ConclusionTable") -> tuple[TaggedLiteral, ...]:
        """Signed conclusions determined here but not in ``old``.

        Flips count as well: a status that changed from proved to
        refuted yields the newly derived negative conclusion.
        """
        fresh = []
        for literal in sorted(self.literals, key=literal_sort_key):
            for mode in MODES:
                for tag in TAGS:
                    status = self.status(tag, mode, literal)
                    if status == UNDETERMINED:
                        continue
                    if old.status(tag, mode, literal) != status:
                        sign = PLUS if status == PROVED else MINUS
                        fresh.append(TaggedLiteral(sign, tag, mode, literal))
        return tuple(fresh)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConclusionTable):
            return NotImplemented
        return (self.literals == other.literals
                and self._statuses == other._statuses)

    def __repr__(self) -> str:
        determined = len(self._statuses)
        return f"<ConclusionTable {determined} determined over {len(self.literals)} literals>"


class _Fixpoint:
    def __init__(self, theory: DefeasibleTheory,
                 extra_literals: Iterable[Literal]):
        literals: set[Literal] = set()
        for _, fact_lit in theory.facts:
            literals.add(fact_lit)
        for rule in theory.rules:
            literals.add(rule.head)
            for ant in rule.antecedents:
                literals.add(ant.literal)
        literals.update(extra_literals)
        literals.update([l.complement() for l in literals])
        self.literals = frozenset(literals)

        self.facts = frozenset(theory.facts)
        heads: dict[tuple[str, Literal], list] = {}
        for rule in theory.rules:
            heads.setdefault((rule.head_mode, rule.head), []).append(rule)
        self.heads = heads
        present = theory.rule_ids()
        self.sup = frozenset(p for p in theory.superiority
                             if p[0] in present and p[1] in present)
        self.status: dict[tuple[str, str, Literal], str] = {}

    def run(self) -> ConclusionTable:
        keys = [
            (tag, mode, literal)
            for literal in sorted(self.literals, key=literal_sort_key)
            for mode in MODES
            for tag in TAGS
        ]
        changed = True
        while changed:
            changed = False
            for key in keys:
                if key in self.status:
                    continue
                pos = self._positive(*key)
                neg = self._negative(*key)
                if pos and neg:
                    raise CoherenceError(f"incoherent conclusion for {key}")
                if pos:
                    self.status[key] = PROVED
                    changed = True
                elif neg:
                    self.status[key] = REFUTED
                    changed = True
        return ConclusionTable(self.status, self.literals)

    # Antecedent satisfaction against the statuses derived so far.

    def _sat(self, ant: Antecedent, ambient: str) -> bool:
        if ant.tag is None:
            want = PROVED
            key = (ambient, ant.mode, ant.literal)
        else:
            want = PROVED if ant.sign == PLUS else REFUTED
            key = (ant.tag, ant.mode, ant.literal)
        return self.status.get(key) == want

    def _fails(self, ant: Antecedent, ambient: str) -> bool:
        if ant.tag is None:
            want = REFUTED
            key = (ambient, ant.mode, ant.literal)
        else:
            want = REFUTED if ant.sign == PLUS else PROVED
            key = (ant.tag, ant.mode, ant.literal)
        return self.status.get(key) == want

    def _app(self, rule, ambient: str) -> bool:
        return all(self._sat(a, ambient) for a in rule.antecedents)

    def _disc(self, rule, ambient: str) -> bool:
        return any(self._fails(a, ambient) for a in rule.antecedents)

    def _positive(self, tag: str, mode: str, literal: Literal) -> bool:
        fact = (mode, literal) in self.facts
        if fact:
            return True
        supporters = self.heads.get((mode, literal), ())
        attackers = self.heads.get((mode, literal.complement()), ())
        sup = self.sup
        app, disc = self._app, self._disc
        if tag == SIGMA_MINUS:
            return any(app(r, SIGMA_MINUS) for r in supporters)
        if tag == SIGMA:
            return any(
                app(r, SIGMA) and all(
                    disc(s, DELTA)
                    for s in attackers if (s.id, r.id) in sup)
                for r in supporters)
        if tag == PARTIAL:
            ambient, guard = PARTIAL, PARTIAL
        else:
            ambient, guard = DELTA, SIGMA
        if (mode, literal.complement()) in self.facts:
            return False
        return any(
            app(r, ambient) and all(
                disc(s, guard) or any(
                    app(t, ambient) and (t.id, s.id) in sup
                    for t in supporters)
                for s in attackers)
            for r in supporters)

    def _negative(self, tag: str, mode: str, literal: Literal) -> bool:
        if (mode, literal) in self.facts:
            return False
        supporters = self.heads.get((mode, literal), ())
        attackers = self.heads.get((mode, literal.complement()), ())
        sup = self.sup
        app, disc = self._app, self._disc
        if tag == SIGMA_MINUS:
            return all(disc(r, SIGMA_MINUS) for r in supporters)
        if tag == SIGMA:
            return all(
                disc(r, SIGMA) or any(
                    (s.id, r.id) in sup and app(s, DELTA)
                    for s in attackers)
                for r in supporters)
        if tag == PARTIAL:
            ambient, guard = PARTIAL, PARTIAL
        else:
            ambient, guard = DELTA, SIGMA
        if (mode, literal.complement()) in self.facts:
            return True
        return all(
            disc(r, ambient) or any(
                app(s, guard) and all(
                    disc(t, ambient) or (t.id, s.id) not in sup
                    for t in supporters)
                for s in attackers)
            for r in supporters)


def compute_conclusions(theory: DefeasibleTheory,
                        extra_literals: Iterable[Literal] = ()) -> ConclusionTable:
    """Derive the full tagged-conclusion table of a theory.

    ``extra_literals`` widens the universe so that literals the theory
    never mentions (claim elements, ad hoc queries) still get a row.
    """
    return _Fixpoint(theory, extra_literals).run()


def holds(theory: DefeasibleTheory, query: TaggedLiteral) -> str:
    """Status of one signed tagged query against a theory."""
    table = compute_conclusions(theory, [query.literal])
    return table.query(query)


@dataclass(frozen=True)
class StandardsReport:
    literal: Literal
    mode: str
    met: tuple[str, ...]


def standards_met(theory: DefeasibleTheory, literal: Literal,
                  mode: str = EVIDENTIAL) -> StandardsReport:
    """Which proof standards a literal meets in the given mode.

    Dialectical validity is checked against the theory with its
    superiority relation removed.
    """
    table = compute_conclusions(theory, [literal])
    met = [
        standard for standard in (SCINTILLA, SUBSTANTIAL, PREPONDERANCE, BRD)
        if table.status(STANDARD_TAG[standard], mode, literal) == PROVED
    ]
    stripped = DefeasibleTheory(theory.facts, theory.rules, frozenset())
    if compute_conclusions(stripped, [literal]).status(
            DELTA, mode, literal) == PROVED:
        met.append(DIALECTICAL_VALIDITY)
    return StandardsReport(literal, mode, tuple(met))


def strength_order(a: tuple[str, str], b: tuple[str, str]) -> int:
    """Compare two signed tags of the same sign.

    Returns -1 when ``a`` is the stronger conclusion, 1 when ``b`` is,
    0 when equal.  Positive tags weaken from delta down to sigma_minus;
    negative tags weaken the other way around, so -sigma_minus is the
    strongest refutation.  Mixed signs are not comparable.
    """
    sign_a, tag_a = a
    sign_b, tag_b = b
    for sign, tag in ((sign_a, tag_a), (sign_b, tag_b)):
        if sign not in (PLUS, MINUS):
            raise ValueError(f"bad sign {sign!r}")
        if tag not in TAGS:
            raise ValueError(f"bad tag {tag!r}")
    if sign_a != sign_b:
        raise ValueError("conclusions with different signs are not comparable")
    rank = _POS_RANK if sign_a == PLUS else _NEG_RANK
    return (rank[tag_a] > rank[tag_b]) - (rank[tag_a] < rank[tag_b])
