import pytest
from hypothesis import given, settings, strategies as st

from trialogic import (
    BRD, DELTA, DIALECTICAL_VALIDITY, EVIDENTIAL, OBLIGATION, PARTIAL,
    PREPONDERANCE, PROVED, REFUTED, SCINTILLA, SIGMA, SIGMA_MINUS,
    SUBSTANTIAL, TAGS, UNDETERMINED, Antecedent, DefeasibleTheory, Rule,
    compute_conclusions, holds, lit, parse_query, standards_met,
    strength_order,
)
from trialogic.corpus import random_theory

# tag order from strongest positive proof to weakest
_CHAIN = (DELTA, PARTIAL, SIGMA, SIGMA_MINUS)


def probe(theory, text):
    return holds(theory, parse_query(text))


class TestFactsAndVacuity:
    def test_fact_proved_at_every_tag(self):
        theory = DefeasibleTheory(frozenset({(EVIDENTIAL, lit("a"))}), ())
        for tag in "dpsw":
            assert probe(theory, f"+{tag} a") == PROVED

    def test_unmentioned_literal_is_refuted(self):
        theory = DefeasibleTheory(frozenset({(EVIDENTIAL, lit("a"))}), ())
        table = compute_conclusions(theory)
        assert table.status(DELTA, EVIDENTIAL, lit("zz")) == REFUTED
        assert table.is_determined(lit("zz"))

    def test_universe_is_complement_closed(self):
        theory = DefeasibleTheory(frozenset({(EVIDENTIAL, lit("a"))}), ())
        table = compute_conclusions(theory)
        assert lit("~a") in table.literals
        assert table.status(DELTA, EVIDENTIAL, lit("~a")) == REFUTED

    def test_conflicting_facts_both_stand(self):
        theory = DefeasibleTheory(
            frozenset({(EVIDENTIAL, lit("a")), (EVIDENTIAL, lit("~a"))}), ())
        assert probe(theory, "+d a") == PROVED
        assert probe(theory, "+d ~a") == PROVED

    def test_fact_refutes_supported_opposite_at_ambiguity_tags(self):
        # a live supporter keeps ~a at bare support, but the opposing
        # fact refutes it at the ambiguity-handling tags regardless.
        theory = DefeasibleTheory(
            frozenset({(EVIDENTIAL, lit("a")), (EVIDENTIAL, lit("t"))}),
            (Rule("rx", (Antecedent(EVIDENTIAL, lit("t")),),
                  EVIDENTIAL, lit("~a")),))
        assert probe(theory, "+s ~a") == PROVED
        assert probe(theory, "-p ~a") == PROVED
        assert probe(theory, "-d ~a") == PROVED
        assert probe(theory, "-s ~a") == REFUTED
        assert probe(theory, "+d a") == PROVED


class TestAmbiguity:
    """Frozen statuses for the two-chain conflict fixture."""

    EXPECTED = {
        "+s c": PROVED, "+s ~c": PROVED,
        "-p c": PROVED, "-p ~c": PROVED,
        "-d c": PROVED, "-d ~c": PROVED,
        "+w c": PROVED, "+w ~c": PROVED,
        "+p e": PROVED, "-d e": PROVED,
        "+s e": PROVED, "+w e": PROVED,
        "+s ~e": PROVED, "-p ~e": PROVED, "-d ~e": PROVED,
    }

    def test_frozen_table(self, ambiguity):
        theory = ambiguity.union_theory()
        for query, status in self.EXPECTED.items():
            assert probe(theory, query) == status, query

    def test_blocking_and_propagation_differ_on_e(self, ambiguity):
        theory = ambiguity.union_theory()
        assert probe(theory, "+p e") == PROVED
        assert probe(theory, "+d e") == REFUTED


class TestDeonticChaining:
    def test_s3_union_table(self, s3):
        theory = s3.union_theory()
        assert probe(theory, "+d O b") == PROVED
        assert probe(theory, "-p O ~b") == PROVED
        assert probe(theory, "-s O ~b") == PROVED
        assert probe(theory, "+w O ~b") == PROVED
        assert probe(theory, "+d b") == PROVED

    def test_s4_support_conflict(self, s4):
        theory = s4.union_theory()
        assert probe(theory, "+s O b") == PROVED
        assert probe(theory, "+s O ~b") == PROVED
        assert probe(theory, "-p O b") == PROVED
        assert probe(theory, "-p O ~b") == PROVED

    def test_obligation_does_not_feed_evidence(self, s4):
        # O b is supported, but nothing supports b evidentially, so the
        # evidential side is definitively refuted at every tag
        theory = s4.union_theory()
        assert probe(theory, "+s b") == REFUTED
        assert probe(theory, "-w b") == PROVED

    def test_deontic_antecedent(self):
        theory = DefeasibleTheory(
            frozenset({(OBLIGATION, lit("q"))}),
            (Rule("r1", (Antecedent(OBLIGATION, lit("q")),),
                  EVIDENTIAL, lit("s")),))
        assert probe(theory, "+d s") == PROVED


class TestCycles:
    def test_everything_undetermined(self, cycle):
        theory = cycle.union_theory()
        for atom in ("p", "q"):
            for sign in "+-":
                for tag in "dpsw":
                    assert probe(theory, f"{sign}{tag} {atom}") == \
                        UNDETERMINED, (sign, tag, atom)

    def test_cycle_plus_fact_resolves(self):
        theory = DefeasibleTheory(
            frozenset({(EVIDENTIAL, lit("p"))}),
            (Rule("loop", (Antecedent(EVIDENTIAL, lit("p")),),
                  EVIDENTIAL, lit("p")),))
        assert probe(theory, "+d p") == PROVED


class TestAnnotatedAntecedents:
    EXPECTED = {
        "+p O c": PROVED,   # fires on bare support for ambiguous c
        "+p O d": REFUTED,  # needs c at the blocking tag, which fails
        "-d O d": PROVED,
        "+p O f": PROVED,   # fires on the refutation of e
        "+d O f": PROVED,
    }

    def test_frozen_statuses(self, annotated):
        theory = annotated.union_theory()
        for query, status in self.EXPECTED.items():
            assert probe(theory, query) == status, query

    def test_annotation_is_exact(self, annotated):
        # +s c is satisfied, so the rule gated on it fires even at
        # tags where plain c would be discarded.
        theory = annotated.union_theory()
        assert probe(theory, "+s c") == PROVED
        assert probe(theory, "-p c") == PROVED
        assert probe(theory, "+d O c") == PROVED


class TestSuperiority:
    def test_beaten_attacker_restores_proof(self, s3):
        # with the priority the conflict resolves; without it the two
        # obligations refute each other
        theory = s3.union_theory()
        assert probe(theory, "+p O b") == PROVED
        stripped = DefeasibleTheory(theory.facts, theory.rules, frozenset())
        assert probe(stripped, "+p O b") == REFUTED
        assert probe(stripped, "+p O ~b") == REFUTED

    def test_cross_mode_superiority_is_inert(self):
        base = [
            Rule("r1", (Antecedent(EVIDENTIAL, lit("a")),),
                 EVIDENTIAL, lit("b")),
            Rule("r2", (Antecedent(EVIDENTIAL, lit("a")),),
                 OBLIGATION, lit("~b")),
        ]
        facts = frozenset({(EVIDENTIAL, lit("a"))})
        with_sup = DefeasibleTheory(facts, tuple(base),
                                    frozenset({("r1", "r2")}))
        without = DefeasibleTheory(facts, tuple(base))
        assert compute_conclusions(with_sup) == compute_conclusions(without)


class TestQuerySemantics:
    def test_negative_query_statuses(self, ambiguity):
        theory = ambiguity.union_theory()
        assert probe(theory, "-d e") == PROVED
        assert probe(theory, "-p e") == REFUTED
        assert probe(theory, "+d e") == REFUTED

    def test_undetermined_query(self, cycle):
        assert probe(cycle.union_theory(), "+d p") == UNDETERMINED


class TestNewlyDetermined:
    def test_flip_counts_as_new(self, s1):
        opened = compute_conclusions(s1.theory_for({"r2", "r3", "r4"}))
        extended = compute_conclusions(
            s1.theory_for({"r2", "r3", "r4", "r4a", "r5"}))
        fresh = {entry.render() for entry in extended.newly_determined(opened)}
        assert "-d b" in fresh
        assert "+s ~b" in fresh

    def test_no_change_is_empty(self, s1):
        table = compute_conclusions(s1.theory_for({"r1"}))
        assert table.newly_determined(table) == ()


class TestStandards:
    def test_ambiguity_fixture(self, ambiguity):
        report = standards_met(ambiguity.union_theory(), lit("e"))
        assert report.met == (SCINTILLA, SUBSTANTIAL, PREPONDERANCE)

    def test_brd_without_dialectical_validity(self, s3):
        report = standards_met(s3.union_theory(), lit("b"), OBLIGATION)
        assert BRD in report.met
        assert DIALECTICAL_VALIDITY not in report.met

    def test_dialectical_validity_when_unopposed(self):
        theory = DefeasibleTheory(
            frozenset({(EVIDENTIAL, lit("a"))}),
            (Rule("r1", (Antecedent(EVIDENTIAL, lit("a")),),
                  EVIDENTIAL, lit("b")),))
        report = standards_met(theory, lit("b"))
        assert report.met == (SCINTILLA, SUBSTANTIAL, PREPONDERANCE, BRD,
                              DIALECTICAL_VALIDITY)

    def test_nothing_met(self, cycle):
        report = standards_met(cycle.union_theory(), lit("p"))
        assert report.met == ()


class TestStrengthOrder:
    def test_positive_chain(self):
        assert strength_order(("+", DELTA), ("+", PARTIAL)) == -1
        assert strength_order(("+", SIGMA_MINUS), ("+", SIGMA)) == 1
        assert strength_order(("+", SIGMA), ("+", SIGMA)) == 0

    def test_negative_chain_reversed(self):
        assert strength_order(("-", SIGMA_MINUS), ("-", DELTA)) == -1
        assert strength_order(("-", DELTA), ("-", PARTIAL)) == 1

    def test_mixed_signs_rejected(self):
        with pytest.raises(ValueError):
            strength_order(("+", DELTA), ("-", DELTA))


class TestInclusions:
    """The proof-strength ladder on random theories, both modes."""

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_ladder(self, seed):
        theory = random_theory(seed, allow_annotations=False)
        table = compute_conclusions(theory)
        for literal in table.literals:
            for mode in (EVIDENTIAL, OBLIGATION):
                statuses = [table.status(tag, mode, literal)
                            for tag in _CHAIN]
                for stronger, weaker in zip(statuses, statuses[1:]):
                    if stronger == PROVED:
                        assert weaker == PROVED, (literal, mode, statuses)
                    if weaker == REFUTED:
                        assert stronger == REFUTED, (literal, mode, statuses)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_no_coherence_violations(self, seed):
        # computing at all asserts the tripwire; spot check statuses too
        theory = random_theory(seed, allow_annotations=True)
        table = compute_conclusions(theory)
        for literal in table.literals:
            for mode in (EVIDENTIAL, OBLIGATION):
                for tag in TAGS:
                    assert table.status(tag, mode, literal) in (
                        PROVED, REFUTED, UNDETERMINED)
