"""Two-player disclosure game over a partitioned theory.

The prosecutor opens by disclosing a subset of their private rules that
makes the whole claim provable at the configured standards: every claim
literal evidentially, and the obligation of its complement deontically.
Play then alternates.  A non-pass move discloses private rules and
declares at least one target literal; it is legal when every target had
some determined status before the move (in any mode, at any tag) and
gains some newly determined status in its declared mode, for the
literal or its complement, once the rules migrate.  A pass is always
legal.

The game ends as soon as the defence's condition holds while the
prosecutor has nothing left (some claim literal refuted evidentially or
deontically), or the prosecutor's claim stands while the defence has
nothing left, or both pools are empty.  Two consecutive passes instead
trigger adjudication: a player who passed is defeated when their goal
fails and no subset of their remaining pool could achieve it, which
settles games that the strict conditions leave open.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .dsl import ParseError, ParseFailure, SourceSpan
from .engine import ConclusionTable, compute_conclusions
from .model import (
    DEF, EVIDENTIAL, OBLIGATION, PLUS, PR, MINUS, PLAYERS, GameSetup,
    Literal, TaggedLiteral, lit, literal_sort_key,
)

PR_SUCCEEDS = "pr_succeeds"
DEF_SUCCEEDS = "def_succeeds"
STALLED = "stalled"
ONGOING = "ongoing"
TERMINAL_OUTCOMES = (PR_SUCCEEDS, DEF_SUCCEEDS, STALLED)


@dataclass(frozen=True)
class Move:
    """One turn: disclosed rule ids plus declared target literals.

    An empty rule set is a pass and declares no targets.
    """

    player: str
    rule_ids: frozenset[str]
    targets: frozenset[tuple[str, Literal]] = frozenset()

    def __post_init__(self) -> None:
        if self.player not in PLAYERS:
            raise ValueError(f"bad player {self.player!r}")
        object.__setattr__(self, "rule_ids", frozenset(self.rule_ids))
        object.__setattr__(self, "targets", frozenset(self.targets))

    @property
    def is_pass(self) -> bool:
        return not self.rule_ids


@dataclass(frozen=True, eq=False)
class GameState:
    """Immutable snapshot after ``turn`` moves."""

    setup: GameSetup
    turn: int
    common_ids: frozenset[str]
    pr_ids: frozenset[str]
    def_ids: frozenset[str]
    consecutive_passes: int
    conclusions: ConclusionTable

    @property
    def mover(self) -> str:
        return PR if self.turn % 2 == 0 else DEF


@dataclass(frozen=True)
class LegalityReport:
    legal: bool
    reasons: tuple[str, ...] = ()


class OpeningRejected(Exception):
    def __init__(self, reasons: Sequence[str]):
        self.reasons = tuple(reasons)
        super().__init__("opening rejected: " + "; ".join(self.reasons))


class IllegalMove(Exception):
    def __init__(self, turn: int, player: str, reasons: Sequence[str]):
        self.turn = turn
        self.player = player
        self.reasons = tuple(reasons)
        super().__init__(
            f"illegal move at turn {turn} ({player}): " + "; ".join(self.reasons))


@dataclass(frozen=True)
class TurnRecord:
    player: str
    rule_ids: tuple[str, ...]
    targets: tuple[tuple[str, Literal], ...]
    newly_determined: tuple[TaggedLiteral, ...]
    conclusions: ConclusionTable

    def as_move(self) -> Move:
        return Move(self.player, frozenset(self.rule_ids),
                    frozenset(self.targets))


@dataclass
class GameTrace:
    setup: GameSetup
    initial_conclusions: ConclusionTable
    records: list[TurnRecord]
    outcome: str

    @property
    def final_conclusions(self) -> ConclusionTable:
        if self.records:
            return self.records[-1].conclusions
        return self.initial_conclusions

    def moves(self) -> list[Move]:
        return [record.as_move() for record in self.records]


def _claim_extras(setup: GameSetup) -> list[Literal]:
    if setup.claim is None:
        return []
    extras = []
    for literal in setup.claim.literals:
        extras.append(literal)
        extras.append(literal.complement())
    return extras


def conclusions_for(setup: GameSetup, rule_ids: Iterable[str],
                    cache: Optional[dict] = None) -> ConclusionTable:
    """Conclusion table of the theory induced by a set of rule ids,
    widened so claim literals always have rows."""
    key = frozenset(rule_ids)
    if cache is not None and key in cache:
        return cache[key]
    table = compute_conclusions(setup.theory_for(key), _claim_extras(setup))
    if cache is not None:
        cache[key] = table
    return table


def claim_established(table: ConclusionTable, setup: GameSetup) -> bool:
    """Every claim literal proved evidentially and the obligation of its
    complement proved deontically, at the configured standards."""
    ev, de = setup.evidential_standard, setup.deontic_standard
    return all(
        table.derived(PLUS, ev, EVIDENTIAL, literal)
        and table.derived(PLUS, de, OBLIGATION, literal.complement())
        for literal in setup.claim.literals)


def claim_refuted(table: ConclusionTable, setup: GameSetup) -> bool:
    """Some claim element lost: its protective obligation refuted or the
    opposite obligation proved, or the literal itself disproved or its
    complement proved, at the configured standards."""
    ev, de = setup.evidential_standard, setup.deontic_standard
    return any(
        table.derived(MINUS, de, OBLIGATION, literal.complement())
        or table.derived(PLUS, de, OBLIGATION, literal)
        or table.derived(PLUS, ev, EVIDENTIAL, literal.complement())
        or table.derived(MINUS, ev, EVIDENTIAL, literal)
        for literal in setup.claim.literals)


def _claim_gaps(table: ConclusionTable, setup: GameSetup) -> list[str]:
    ev, de = setup.evidential_standard, setup.deontic_standard
    gaps = []
    for literal in setup.claim.literals:
        if not table.derived(PLUS, ev, EVIDENTIAL, literal):
            gaps.append(f"claim literal {literal} is not proved evidentially")
        if not table.derived(PLUS, de, OBLIGATION, literal.complement()):
            gaps.append(
                f"obligation of {literal.complement()} is not proved")
    return gaps


def initial_state(setup: GameSetup) -> GameState:
    common = frozenset(r.id for r in setup.common_rules)
    return GameState(
        setup=setup,
        turn=0,
        common_ids=common,
        pr_ids=frozenset(r.id for r in setup.pr_rules),
        def_ids=frozenset(r.id for r in setup.def_rules),
        consecutive_passes=0,
        conclusions=conclusions_for(setup, common),
    )


def open_game(setup: GameSetup, opening_ids: Iterable[str]) -> GameState:
    """Play the opening: migrate the given prosecutor rules and check
    that the whole claim is established.  Raises OpeningRejected with
    one reason per unmet claim component otherwise."""
    if setup.claim is None:
        raise ValueError("setup has no claim to prosecute")
    opening = frozenset(opening_ids)
    own = frozenset(r.id for r in setup.pr_rules)
    stray = opening - own
    if stray:
        raise ValueError(
            "opening rules not in the pr pool: " + ", ".join(sorted(stray)))
    state = initial_state(setup)
    common = state.common_ids | opening
    table = conclusions_for(setup, common)
    gaps = _claim_gaps(table, setup)
    if gaps:
        raise OpeningRejected(gaps)
    return GameState(
        setup=setup,
        turn=1,
        common_ids=common,
        pr_ids=state.pr_ids - opening,
        def_ids=state.def_ids,
        consecutive_passes=0,
        conclusions=table,
    )


def _attempt(state: GameState, move: Move):
    """Shared legality check.  Returns (report, next_state or None)."""
    reasons: list[str] = []
    if move.player != state.mover:
        reasons.append(
            f"turn order: it is {state.mover}'s turn, not {move.player}'s")
        return LegalityReport(False, tuple(reasons)), None
    if move.is_pass:
        if move.targets:
            return LegalityReport(
                False, ("a pass declares no targets",)), None
        nxt = GameState(
            setup=state.setup, turn=state.turn + 1,
            common_ids=state.common_ids, pr_ids=state.pr_ids,
            def_ids=state.def_ids,
            consecutive_passes=state.consecutive_passes + 1,
            conclusions=state.conclusions)
        return LegalityReport(True), nxt

    pool = state.pr_ids if move.player == PR else state.def_ids
    stray = move.rule_ids - pool
    if stray:
        reasons.append(
            "ownership: rules not in the mover's private pool: "
            + ", ".join(sorted(stray)))
        return LegalityReport(False, tuple(reasons)), None
    if not move.targets:
        return LegalityReport(
            False, ("a non-pass move must declare at least one target",)), None

    common = state.common_ids | move.rule_ids
    table = conclusions_for(state.setup, common)
    old = state.conclusions
    newly = table.newly_determined(old)
    changed = {(entry.mode, entry.literal) for entry in newly}
    for mode, literal in sorted(
            move.targets, key=lambda t: (t[0], literal_sort_key(t[1]))):
        if not old.is_determined(literal):
            reasons.append(
                f"target precondition: {literal} has no determined status "
                "in the current theory")
        elif not ((mode, literal) in changed
                  or (mode, literal.complement()) in changed):
            reasons.append(
                f"target postcondition: the move determines nothing new "
                f"about {literal} in mode {mode}")
    if reasons:
        return LegalityReport(False, tuple(reasons)), None
    nxt = GameState(
        setup=state.setup, turn=state.turn + 1, common_ids=common,
        pr_ids=state.pr_ids - move.rule_ids,
        def_ids=state.def_ids - move.rule_ids,
        consecutive_passes=0, conclusions=table)
    return LegalityReport(True), nxt


def legal_move(state: GameState, move: Move) -> LegalityReport:
    report, _ = _attempt(state, move)
    return report


def apply_move(state: GameState, move: Move) -> GameState:
    report, nxt = _attempt(state, move)
    if not report.legal:
        raise IllegalMove(state.turn, move.player, report.reasons)
    return nxt


def termination_for(setup: GameSetup, table: ConclusionTable,
                    pr_ids: frozenset[str], def_ids: frozenset[str]) -> str:
    """The strict end-of-game test.  The defence's condition is checked
    first, so degenerate theories where both hold resolve that way."""
    good = claim_established(table, setup)
    bad = claim_refuted(table, setup)
    if not pr_ids and bad:
        return DEF_SUCCEEDS
    if not def_ids and good:
        return PR_SUCCEEDS
    if not pr_ids and not def_ids:
        return DEF_SUCCEEDS if bad else (PR_SUCCEEDS if good else STALLED)
    return ONGOING


def termination_status(state: GameState) -> str:
    if state.setup.claim is None:
        raise ValueError("setup has no claim to prosecute")
    return termination_for(state.setup, state.conclusions,
                           state.pr_ids, state.def_ids)


def _subsets(ids: frozenset[str]):
    ordered = sorted(ids)
    for size in range(len(ordered) + 1):
        for combo in combinations(ordered, size):
            yield frozenset(combo)


def adjudicate_pools(setup: GameSetup, common_ids: frozenset[str],
                     pr_ids: frozenset[str], def_ids: frozenset[str],
                     table_for: Callable[[frozenset], ConclusionTable]) -> str:
    """Settle a stalled exchange.

    A player is defeated when their goal fails in the current theory and
    no subset of their remaining pool would achieve it.  If neither or
    both are defeated the current claim status (defence first) decides.
    """
    table = table_for(common_ids)
    good = claim_established(table, setup)
    bad = claim_refuted(table, setup)
    pr_defeated = not good and not any(
        claim_established(table_for(common_ids | subset), setup)
        for subset in _subsets(pr_ids))
    def_defeated = not bad and not any(
        claim_refuted(table_for(common_ids | subset), setup)
        for subset in _subsets(def_ids))
    if pr_defeated and def_defeated:
        return STALLED
    if pr_defeated:
        return DEF_SUCCEEDS
    if def_defeated:
        return PR_SUCCEEDS
    if bad:
        return DEF_SUCCEEDS
    if good:
        return PR_SUCCEEDS
    return STALLED


def adjudicate(state: GameState, cache: Optional[dict] = None) -> str:
    cache = {} if cache is None else cache
    return adjudicate_pools(
        state.setup, state.common_ids, state.pr_ids, state.def_ids,
        lambda ids: conclusions_for(state.setup, ids, cache))


def _claim_targets(setup: GameSetup) -> frozenset[tuple[str, Literal]]:
    targets = set()
    for literal in setup.claim.literals:
        targets.add((EVIDENTIAL, literal))
        targets.add((OBLIGATION, literal.complement()))
    return frozenset(targets)


def _sorted_targets(targets) -> tuple[tuple[str, Literal], ...]:
    return tuple(sorted(targets, key=lambda t: (t[0], literal_sort_key(t[1]))))


def run_game(setup: GameSetup, moves: Sequence[Move]) -> GameTrace:
    """Drive a scripted game.  The first move is always the opening (an
    empty rule set means prosecuting from common rules alone); later
    moves are validated in full.  Raises OpeningRejected or IllegalMove
    on bad scripts, including moves after the game has ended."""
    state = initial_state(setup)
    trace = GameTrace(setup, state.conclusions, [], ONGOING)
    outcome = termination_status(state)
    cache: dict = {}
    for index, move in enumerate(moves):
        if outcome in TERMINAL_OUTCOMES:
            raise IllegalMove(state.turn, move.player,
                              ("the game has already ended",))
        if index == 0:
            if move.player != PR:
                raise IllegalMove(0, move.player,
                                  ("the opening move belongs to pr",))
            before = state.conclusions
            state = open_game(setup, move.rule_ids)
            targets = move.targets or _claim_targets(setup)
            trace.records.append(TurnRecord(
                PR, tuple(sorted(move.rule_ids)), _sorted_targets(targets),
                state.conclusions.newly_determined(before), state.conclusions))
        else:
            before = state.conclusions
            state = apply_move(state, move)
            trace.records.append(TurnRecord(
                move.player, tuple(sorted(move.rule_ids)),
                _sorted_targets(move.targets),
                state.conclusions.newly_determined(before), state.conclusions))
        outcome = termination_status(state)
        if outcome == ONGOING and state.consecutive_passes >= 2:
            outcome = adjudicate(state, cache)
    trace.outcome = outcome
    return trace


_MOVE_LINE_RE = re.compile(r"(pr|def)\s*:\s*(.*)\.\s*$")
_TARGET_RE = re.compile(r"([EO])\s+(~?[a-z][A-Za-z0-9_]*)\s*$")
_ID_RE = re.compile(r"[a-z][A-Za-z0-9_]*\s*$")


def parse_moves(text: str) -> list[Move]:
    """Parse a moves file: one move per line, comments with ``#``.

        pr: r1, r4 targets E b, O ~b.
        def: pass.

    Targets are mandatory for non-pass moves after the opening; the
    opening may omit them (they default to the claim)."""
    moves: list[Move] = []
    errors: list[ParseError] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        span = SourceSpan(number, 1, len(line))
        match = _MOVE_LINE_RE.match(line)
        if not match:
            errors.append(ParseError(
                span, "expected 'pr: ...' or 'def: ...' ending with '.'"))
            continue
        player, body = match.group(1), match.group(2).strip()
        if body == "pass":
            moves.append(Move(player, frozenset()))
            continue
        rules_part, sep, targets_part = body.partition("targets")
        ids = [part.strip() for part in rules_part.split(",")]
        bad = [i for i in ids if not _ID_RE.match(i)]
        if not ids or bad:
            errors.append(ParseError(
                span, f"bad rule id list {rules_part.strip()!r}"))
            continue
        targets = set()
        if not sep and moves:
            errors.append(ParseError(
                span, "a non-pass move after the opening needs a "
                      "targets clause"))
            continue
        if sep:
            ok = True
            for part in targets_part.split(","):
                target_match = _TARGET_RE.match(part.strip())
                if not target_match:
                    errors.append(ParseError(
                        span, f"bad target {part.strip()!r}: expected "
                              "'E lit' or 'O lit'"))
                    ok = False
                    break
                mode, literal = target_match.groups()
                targets.add((mode, lit(literal)))
            if not ok:
                continue
        moves.append(Move(player, frozenset(ids), frozenset(targets)))
    if errors:
        raise ParseFailure(errors)
    return moves
