import pytest
from hypothesis import given, settings, strategies as st

from trialogic import (
    DELTA, EVIDENTIAL, OBLIGATION, PARTIAL, SIGMA,
    ParseFailure, lit, parse_query, parse_theory, serialize_theory,
)
from trialogic.corpus import random_setup

from conftest import FIXTURES


class TestParsing:
    def test_s1_structure(self, s1):
        assert {r.id for r in s1.pr_rules} == {"r1", "r2", "r3", "r4"}
        assert {r.id for r in s1.def_rules} == {"r4a", "r5", "r6"}
        assert s1.common_rules == ()
        assert s1.claim.literals == (lit("b"),)
        assert s1.facts == {(EVIDENTIAL, lit("a")), (EVIDENTIAL, lit("d")),
                            (EVIDENTIAL, lit("f")), (EVIDENTIAL, lit("g"))}
        assert s1.evidential_standard == DELTA
        assert s1.deontic_standard == PARTIAL

    def test_deontic_rule_head(self, s1):
        r4 = s1.rule_by_id()["r4"]
        assert r4.head_mode == OBLIGATION
        assert r4.head == lit("~b")
        assert r4.antecedents[0].mode == EVIDENTIAL

    def test_standard_statement(self, s2):
        assert s2.evidential_standard == PARTIAL
        assert s2.deontic_standard == PARTIAL

    def test_superiority(self, s3):
        assert s3.superiority == {("r10", "r4")}

    def test_unlisted_rules_default_to_common(self):
        setup = parse_theory(
            "rule r1: a => b. rule r2: a => c. game pr: r1.")
        assert {r.id for r in setup.common_rules} == {"r2"}
        assert {r.id for r in setup.pr_rules} == {"r1"}

    def test_annotated_antecedents(self, annotated):
        n4 = annotated.rule_by_id()["n4"]
        ant = n4.antecedents[0]
        assert ant.annotated
        assert ant.sign == "+"
        assert ant.tag == PARTIAL

    def test_deontic_fact(self):
        setup = parse_theory("fact O ~b.")
        assert setup.facts == {(OBLIGATION, lit("~b"))}

    def test_comments_and_blank_lines(self):
        setup = parse_theory("# nothing\n\nfact a.  # trailing\n")
        assert setup.facts == {(EVIDENTIAL, lit("a"))}


class TestParseErrors:
    def expect(self, text, fragment):
        with pytest.raises(ParseFailure) as exc:
            parse_theory(text)
        rendered = [e.render() for e in exc.value.errors]
        assert any(fragment in line for line in rendered), rendered

    def test_uppercase_atom(self):
        self.expect("fact A.", "unexpected character 'A'")

    def test_missing_antecedent(self):
        self.expect("rule r1: => b.", "expected an atom")

    def test_duplicate_rule(self):
        self.expect("rule r1: a => b. rule r1: a => c.", "duplicate rule id")

    def test_unknown_superiority_reference(self):
        self.expect("rule r1: a => b. sup r9 > r1.", "unknown rule id 'r9'")

    def test_unknown_pool(self):
        self.expect("game judge: r1.", "unknown pool")

    def test_rule_in_two_pools(self):
        self.expect("rule r1: a => b. game pr: r1. game def: r1.",
                    "more than one pool")

    def test_game_section_unknown_rule(self):
        self.expect("rule r1: a => b. game pr: r9.",
                    "game section references unknown rule id")

    def test_unknown_annotation_tag(self):
        self.expect("rule r2: +x c => d.", "unknown proof tag 'x'")

    def test_deontic_standard_restricted(self):
        self.expect("standard deontic s.", "deontic standard must be d or p")

    def test_duplicate_claim(self):
        self.expect("claim: b. claim: c.", "duplicate claim")

    def test_duplicate_standard(self):
        self.expect("standard evidential d. standard evidential p.",
                    "duplicate evidential standard")

    def test_recovery_reports_several_errors(self):
        with pytest.raises(ParseFailure) as exc:
            parse_theory("fact A.\nrule r1: => b.\nrule r1: a => b.\n"
                         "rule r1: a => b.\nsup r9 > r1.")
        assert len(exc.value.errors) >= 3
        lines = [e.span.line for e in exc.value.errors]
        assert lines == sorted(lines)


class TestQueries:
    def test_forms(self):
        q = parse_query("+d b")
        assert (q.sign, q.tag, q.mode, q.literal) == \
            ("+", DELTA, EVIDENTIAL, lit("b"))
        q = parse_query("-p O ~b")
        assert (q.sign, q.tag, q.mode, q.literal) == \
            ("-", PARTIAL, OBLIGATION, lit("~b"))
        q = parse_query("+s e")
        assert q.tag == SIGMA

    def test_render_round_trip(self):
        for text in ["+d b", "-p O ~b", "+w x", "-s O q"]:
            assert parse_query(text).render() == text

    def test_bad_queries(self):
        for bad in ["d b", "+z b", "+d", "+d B", "++d b", "+d O", ""]:
            with pytest.raises(ParseFailure):
                parse_query(bad)


class TestSerialization:
    def test_golden(self):
        text = ("fact a. rule r1: a =>O ~b. claim: b. game pr: r1. "
                "standard evidential s.")
        expected = ("fact a.\n"
                    "rule r1: a =>O ~b.\n"
                    "claim: b.\n"
                    "game pr: r1.\n"
                    "standard evidential s.\n")
        assert serialize_theory(parse_theory(text)) == expected

    def test_defaults_omitted(self):
        out = serialize_theory(parse_theory("fact a."))
        assert "standard" not in out
        assert "game" not in out

    def test_fixture_round_trips(self):
        for path in sorted(FIXTURES.glob("*.ddt")):
            setup = parse_theory(path.read_text(encoding="utf-8"))
            out = serialize_theory(setup)
            assert parse_theory(out) == setup, path.name
            assert serialize_theory(parse_theory(out)) == out, path.name

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_random_round_trips(self, seed):
        setup = random_setup(seed, allow_annotations=True)
        out = serialize_theory(setup)
        assert parse_theory(out) == setup
        assert serialize_theory(parse_theory(out)) == out
