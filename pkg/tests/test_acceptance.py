"""The acceptance gate, one check per test.

Each test prints a single verdict line (visible with -v through the
test name, and with -s through stdout) and enforces its runtime budget
where one is fixed.  Frozen expectations here were derived by hand
before the implementation existed; property checks run on the seeded
random corpus, so every run sees the same theories.
"""

import json
import subprocess
import sys
import time
from pathlib import Path

from trialogic import (
    BRD, DEF_SUCCEEDS, DELTA, DIALECTICAL_VALIDITY, EVIDENTIAL,
    FULL_DISCLOSURE, GREEDY_MINIMAL, MINUS, NOT_PERMITTED, OBLIGATION,
    PARTIAL, PLUS, PR_SUCCEEDS, PREPONDERANCE, PROVED, SCINTILLA, SIGMA,
    SIGMA_MINUS, SUBSTANTIAL, WEAKLY_PERMITTED, DefeasibleTheory, auto_play,
    check_obligation_permission, compute_conclusions, corpus,
    delta_equivalence_check, game_weakly_permitted, lit,
    minimal_winning_opening, open_game, opening_is_winning, parse_moves,
    parse_theory, run_game, serialize_theory, standards_met, weakly_permitted,
)

CORPUS_SIZE = 1000
ORACLE_CORPUS_SIZE = 500
ROUND_TRIP_SETUPS = 200

POS_CHAIN = (DELTA, PARTIAL, SIGMA, SIGMA_MINUS)
NEG_CHAIN = (SIGMA_MINUS, SIGMA, PARTIAL, DELTA)


def _verdict(label, ok, detail, elapsed, budget=None):
    inside = budget is None or elapsed < budget
    status = "PASS" if ok and inside else "FAIL"
    timing = f"{elapsed:.2f}s" + (f" < {budget:g}s" if budget else "")
    line = f"{label}: {status} ({detail}; {timing})"
    print(line)
    assert ok and inside, line


def test_a1_first_scenario_replays_exactly(s1, fixtures_dir):
    start = time.monotonic()
    open_game(s1, {"r1", "r4"})  # raises OpeningRejected if not accepted
    greedy = auto_play(s1, GREEDY_MINIMAL)
    script = parse_moves((fixtures_dir / "s1_play_b.moves").read_text())
    scripted = run_game(s1, script)
    full = auto_play(s1, FULL_DISCLOSURE)
    ok = (greedy.outcome == PR_SUCCEEDS
          and greedy.records[0].rule_ids == ("r1", "r4")
          and scripted.records[0].rule_ids == ("r2", "r3", "r4")
          and scripted.records[1].rule_ids == ("r4a", "r5")
          and scripted.outcome == DEF_SUCCEEDS
          and full.outcome == DEF_SUCCEEDS)
    detail = (f"greedy {greedy.outcome}, scripted {scripted.outcome}, "
              f"full {full.outcome}")
    _verdict("acceptance 1/9 scenario-one replay", ok, detail,
             time.monotonic() - start, budget=1.0)


def test_a2_blocking_standard_needs_full_disclosure(s2):
    start = time.monotonic()
    minimal = minimal_winning_opening(s2)
    fragile = not opening_is_winning(s2, {"r1", "r4"})
    script = parse_moves(
        "pr: r1, r4.\ndef: r7a, r8 targets E b.\npr: pass.\ndef: pass.\n")
    losing_line = run_game(s2, script)
    ok = (minimal == ("r1", "r4", "r7")
          and fragile
          and losing_line.outcome == DEF_SUCCEEDS)
    detail = (f"minimal opening {minimal}, small opening "
              f"{'fragile' if fragile else 'robust'}, "
              f"losing line {losing_line.outcome}")
    _verdict("acceptance 2/9 minimal disclosure under blocking", ok, detail,
             time.monotonic() - start, budget=5.0)


def test_a3_inclusion_ladder_holds_on_corpus():
    start = time.monotonic()
    violations = []
    for index, theory in enumerate(corpus.theories(CORPUS_SIZE)):
        table = compute_conclusions(theory)
        for literal in table.literals:
            for mode in (EVIDENTIAL, OBLIGATION):
                pos = [table.derived(PLUS, tag, mode, literal)
                       for tag in POS_CHAIN]
                neg = [table.derived(MINUS, tag, mode, literal)
                       for tag in NEG_CHAIN]
                for i in range(4):
                    for j in range(i + 1, 4):
                        if pos[i] and not pos[j]:
                            violations.append((index, "+", mode, literal))
                        if neg[i] and not neg[j]:
                            violations.append((index, "-", mode, literal))
                is_fact = (mode, literal) in theory.facts
                if is_fact and not all(pos):
                    violations.append((index, "fact+", mode, literal))
                if neg[0] and is_fact:
                    violations.append((index, "fact-", mode, literal))
    ok = not violations
    detail = f"{CORPUS_SIZE} theories, {len(violations)} violations"
    _verdict("acceptance 3/9 inclusion ladder", ok, detail,
             time.monotonic() - start, budget=60.0)


def test_a4_obligation_implies_permission_on_corpus(s4):
    start = time.monotonic()
    violations = []
    vacuous = 0
    obliged = 0
    for index, theory in enumerate(corpus.theories(CORPUS_SIZE)):
        report = check_obligation_permission(theory)
        if report.vacuous:
            vacuous += 1
            continue
        if not report.holds:
            violations.append((index, report.violations))
        table = compute_conclusions(theory)
        for literal in table.literals:
            for tag in (DELTA, PARTIAL):
                if table.status(tag, OBLIGATION, literal) != PROVED:
                    continue
                obliged += 1
                status = weakly_permitted(theory, literal, tag).status
                if status != WEAKLY_PERMITTED:
                    violations.append((index, "restatement", tag, literal))
    sigma_table = compute_conclusions(s4.union_theory())
    witness = (sigma_table.derived(PLUS, SIGMA, OBLIGATION, lit("b"))
               and sigma_table.derived(PLUS, SIGMA, OBLIGATION, lit("~b")))
    ok = not violations and witness
    detail = (f"{CORPUS_SIZE - vacuous} consistent theories, "
              f"{obliged} obligations, {len(violations)} violations, "
              f"support-level conflict witness "
              f"{'present' if witness else 'missing'}")
    _verdict("acceptance 4/9 obligation implies permission", ok, detail,
             time.monotonic() - start, budget=30.0)


def test_a5_grounded_oracle_agrees_on_corpus():
    start = time.monotonic()
    disagreements = []
    checked = 0
    for seed in range(ORACLE_CORPUS_SIZE):
        theory = corpus.random_theory(
            seed, allow_superiority=False, stratified=True)
        report = delta_equivalence_check(theory)
        checked += report.checked
        if not (report.agrees and report.authoritative):
            disagreements.append((seed, report.discrepancies, report.caveats))
    ok = not disagreements
    detail = (f"{ORACLE_CORPUS_SIZE} theories, {checked} conclusions, "
              f"{len(disagreements)} disagreements")
    _verdict("acceptance 5/9 grounded-semantics oracle", ok, detail,
             time.monotonic() - start, budget=60.0)


def test_a6_proof_standards_nest_on_corpus():
    start = time.monotonic()
    violations = []
    spot_checks = 0
    for index, theory in enumerate(corpus.theories(CORPUS_SIZE)):
        full = compute_conclusions(theory)
        stripped = compute_conclusions(
            DefeasibleTheory(theory.facts, theory.rules, frozenset()))
        for literal in full.literals:
            for mode in (EVIDENTIAL, OBLIGATION):
                ladder = [full.derived(PLUS, tag, mode, literal)
                          for tag in POS_CHAIN]
                for i in range(3):
                    if ladder[i] and not ladder[i + 1]:
                        violations.append((index, "nesting", mode, literal))
                if stripped.derived(PLUS, DELTA, mode, literal) \
                        and not ladder[0]:
                    violations.append((index, "validity", mode, literal))
        if index % 50 == 0 and full.literals:
            literal = min(full.literals)
            spot_checks += 1
            met = set(standards_met(theory, literal).met)
            expected = {
                standard for standard, tag in
                ((BRD, DELTA), (PREPONDERANCE, PARTIAL),
                 (SUBSTANTIAL, SIGMA), (SCINTILLA, SIGMA_MINUS))
                if full.derived(PLUS, tag, EVIDENTIAL, literal)}
            if stripped.derived(PLUS, DELTA, EVIDENTIAL, literal):
                expected.add(DIALECTICAL_VALIDITY)
            if met != expected:
                violations.append((index, "api", literal, met, expected))
    ok = not violations
    detail = (f"{CORPUS_SIZE} theories, {spot_checks} api spot checks, "
              f"{len(violations)} violations")
    _verdict("acceptance 6/9 proof-standard nesting", ok, detail,
             time.monotonic() - start)


def test_a7_terminal_traces_settle_permission(s1, s3, fixtures_dir):
    start = time.monotonic()
    defended = auto_play(s3, GREEDY_MINIMAL)
    permitted = game_weakly_permitted(defended, lit("b"), PARTIAL)
    script = parse_moves((fixtures_dir / "s1_play_b.moves").read_text())
    evidential_win = run_game(s1, script)
    unpermitted = game_weakly_permitted(evidential_win, lit("b"), PARTIAL)
    ok = (defended.outcome == DEF_SUCCEEDS
          and permitted.status == WEAKLY_PERMITTED
          and evidential_win.outcome == DEF_SUCCEEDS
          and unpermitted.status == NOT_PERMITTED)
    detail = (f"defeated prohibition -> {permitted.status}, "
              f"standing prohibition -> {unpermitted.status}")
    _verdict("acceptance 7/9 game-settled permission", ok, detail,
             time.monotonic() - start)


def test_a8_round_trip_identity(fixtures_dir):
    start = time.monotonic()
    failures = []
    fixtures = sorted(fixtures_dir.glob("*.ddt"))
    for path in fixtures:
        first = parse_theory(path.read_text())
        text = serialize_theory(first)
        second = parse_theory(text)
        if second != first or serialize_theory(second) != text:
            failures.append(path.name)
    for seed in range(ROUND_TRIP_SETUPS):
        setup = corpus.random_setup(seed, allow_annotations=True)
        text = serialize_theory(setup)
        reparsed = parse_theory(text)
        if reparsed != setup or serialize_theory(reparsed) != text:
            failures.append(seed)
    ok = not failures
    detail = (f"{len(fixtures)} fixtures + {ROUND_TRIP_SETUPS} random "
              f"setups, {len(failures)} failures")
    _verdict("acceptance 8/9 round-trip identity", ok, detail,
             time.monotonic() - start)


def test_a9_json_output_is_byte_stable(fixtures_dir):
    start = time.monotonic()
    s1 = str(fixtures_dir / "s1.ddt")
    s2 = str(fixtures_dir / "s2.ddt")
    s3 = str(fixtures_dir / "s3.ddt")
    s4 = str(fixtures_dir / "s4.ddt")
    moves = str(fixtures_dir / "s1_play_b.moves")
    invocations = [
        ["check", s1, "--json"],
        ["prove", s1, "--query", "+d b", "--json"],
        ["prove", s4, "--all", "--json"],
        ["standards", s1, "--literal", "b", "--json"],
        ["permission", s3, "--literal", "b", "--json"],
        ["game", "run", s1, "--moves", moves, "--json"],
        ["game", "auto", s1, "--json"],
        ["game", "auto", s1, "--policy", "full", "--json"],
        ["game", "analyze", s2, "--json"],
        ["game", "analyze", s2, "--evidential-standard", "d", "--json"],
    ]
    unstable = []
    for argv in invocations:
        outputs = set()
        for _ in range(3):
            result = subprocess.run(
                [sys.executable, "-m", "trialogic", *argv],
                capture_output=True)
            outputs.add((result.returncode, result.stdout))
        if len(outputs) != 1:
            unstable.append(argv)
        else:
            code, stdout = outputs.pop()
            if code != 0:
                unstable.append(argv)
            else:
                json.loads(stdout)  # every payload must be valid JSON
    ok = not unstable
    detail = (f"{len(invocations)} invocations x 3 runs, "
              f"{len(unstable)} unstable")
    _verdict("acceptance 9/9 byte-stable JSON output", ok, detail,
             time.monotonic() - start)
