"""Plain-text rule language for theories and game setups.

Statements end with a period; ``#`` starts a comment running to the end
of the line.  Atoms and rule ids match ``[a-z][A-Za-z0-9_]*``; ``~`` is
negation.  The statement forms:

    fact O ~b.
    rule r4: g =>O ~b.
    rule r9: +d a, -p O c, e => f.
    sup r10 > r4.
    claim: b.
    game pr: r1, r4.
    standard evidential p.

``=>`` introduces an evidential head, ``=>O`` a deontic one.  A premise
may be annotated with a sign and a tag token (d, p, s, w for the four
proof tags, strongest first) and may carry the obligation marker ``O``.
Rules not listed under any ``game`` section are common.  ``standard``
lines override the default proof standards of the setup; files without
them keep delta for the evidential half and partial for the deontic
half.

Parsing recovers at statement boundaries, so one bad statement does not
hide errors in the rest of the file.  ``serialize_theory`` emits a
canonical form: statements sorted by kind then content, one per line,
defaults omitted.  Parsing a serialized setup reproduces it exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .model import (
    DEF, DELTA, EVIDENTIAL, OBLIGATION, PARTIAL, PR, TAG_FOR_TOKEN,
    TOKEN_FOR_TAG, Antecedent, Claim, GameSetup, Literal, Rule,
    TaggedLiteral, literal_sort_key,
)


class SourceSpan(NamedTuple):
    line: int
    col: int
    length: int


@dataclass(frozen=True)
class ParseError:
    span: SourceSpan
    message: str
    expected: tuple[str, ...] = ()

    def render(self) -> str:
        return f"{self.span.line}:{self.span.col}: {self.message}"


class ParseFailure(Exception):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(e.render() for e in self.errors))


class _Token(NamedTuple):
    kind: str
    value: str
    span: SourceSpan


_WORD_RE = re.compile(r"[a-z][A-Za-z0-9_]*")
_PUNCT = {">": "GT", ":": "COLON", ",": "COMMA", ".": "DOT",
          "~": "TILDE", "+": "PLUS", "-": "MINUS"}


def _tokenize(text: str):
    tokens: list[_Token] = []
    errors: list[ParseError] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        span = SourceSpan(line, col, 1)
        if ch == "=":
            if text[i:i + 2] == "=>":
                rest = text[i + 2:i + 3]
                if rest == "O" and not _is_word_char(text[i + 3:i + 4]):
                    tokens.append(_Token("DARROW", "=>O",
                                         SourceSpan(line, col, 3)))
                    i += 3
                    col += 3
                else:
                    tokens.append(_Token("ARROW", "=>", SourceSpan(line, col, 2)))
                    i += 2
                    col += 2
                continue
            errors.append(ParseError(span, "unexpected character '='"))
            i += 1
            col += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, span))
            i += 1
            col += 1
            continue
        if ch == "O" and not _is_word_char(text[i + 1:i + 2]):
            tokens.append(_Token("MODE", "O", span))
            i += 1
            col += 1
            continue
        match = _WORD_RE.match(text, i)
        if match:
            word = match.group(0)
            tokens.append(_Token("WORD", word, SourceSpan(line, col, len(word))))
            i = match.end()
            col += len(word)
            continue
        errors.append(ParseError(span, f"unexpected character {ch!r}"))
        i += 1
        col += 1
    tokens.append(_Token("EOF", "", SourceSpan(line, col, 0)))
    return tokens, errors


def _is_word_char(ch: str) -> bool:
    return bool(ch) and (ch.isalnum() or ch == "_")


class _Parser:
    def __init__(self, tokens, errors):
        self.tokens = tokens
        self.pos = 0
        self.errors: list[ParseError] = errors
        self.facts: list[tuple[str, Literal]] = []
        self.rules: list[Rule] = []
        self.sup: list[tuple[str, str, SourceSpan]] = []
        self.claim: Optional[list[Literal]] = None
        self.sections: dict[str, list[tuple[str, SourceSpan]]] = {}
        self.standards: dict[str, str] = {}

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def fail(self, message: str, expected: tuple[str, ...] = ()):
        self.errors.append(ParseError(self.peek().span, message, expected))
        raise _Bail()

    def expect(self, kind: str, what: str) -> _Token:
        if self.peek().kind != kind:
            self.fail(f"expected {what}, found {self.peek().value!r}", (what,))
        return self.advance()

    def skip_statement(self) -> None:
        while self.peek().kind not in ("DOT", "EOF"):
            self.advance()
        if self.peek().kind == "DOT":
            self.advance()

    def parse(self) -> None:
        while self.peek().kind != "EOF":
            try:
                self.statement()
            except _Bail:
                self.skip_statement()

    def statement(self) -> None:
        token = self.peek()
        if token.kind != "WORD":
            self.fail(f"expected a statement keyword, found {token.value!r}",
                      ("fact", "rule", "sup", "claim", "game", "standard"))
        handler = {
            "fact": self.fact_stmt, "rule": self.rule_stmt,
            "sup": self.sup_stmt, "claim": self.claim_stmt,
            "game": self.game_stmt, "standard": self.standard_stmt,
        }.get(token.value)
        if handler is None:
            self.fail(f"unknown statement keyword {token.value!r}",
                      ("fact", "rule", "sup", "claim", "game", "standard"))
        self.advance()
        handler()
        self.expect("DOT", "'.'")

    def literal(self) -> Literal:
        negated = False
        if self.peek().kind == "TILDE":
            self.advance()
            negated = True
        word = self.expect("WORD", "an atom")
        return Literal(word.value, not negated)

    def fact_stmt(self) -> None:
        mode = EVIDENTIAL
        if self.peek().kind == "MODE":
            self.advance()
            mode = OBLIGATION
        self.facts.append((mode, self.literal()))

    def antecedent(self) -> Antecedent:
        sign = tag = None
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = "+" if self.advance().kind == "PLUS" else "-"
            token = self.expect("WORD", "a proof tag (d, p, s or w)")
            if token.value not in TAG_FOR_TOKEN:
                self.fail(f"unknown proof tag {token.value!r}",
                          ("d", "p", "s", "w"))
            tag = TAG_FOR_TOKEN[token.value]
        mode = EVIDENTIAL
        if self.peek().kind == "MODE":
            self.advance()
            mode = OBLIGATION
        return Antecedent(mode, self.literal(), sign, tag)

    def rule_stmt(self) -> None:
        name = self.expect("WORD", "a rule id")
        self.expect("COLON", "':'")
        antecedents = [self.antecedent()]
        while self.peek().kind == "COMMA":
            self.advance()
            antecedents.append(self.antecedent())
        arrow = self.peek()
        if arrow.kind not in ("ARROW", "DARROW"):
            self.fail(f"expected '=>' or '=>O', found {arrow.value!r}",
                      ("=>", "=>O"))
        self.advance()
        head_mode = OBLIGATION if arrow.kind == "DARROW" else EVIDENTIAL
        head = self.literal()
        if any(r.id == name.value for r in self.rules):
            self.errors.append(ParseError(
                name.span, f"duplicate rule id {name.value!r}"))
            return
        self.rules.append(Rule(name.value, tuple(antecedents), head_mode, head))

    def sup_stmt(self) -> None:
        stronger = self.expect("WORD", "a rule id")
        self.expect("GT", "'>'")
        weaker = self.expect("WORD", "a rule id")
        self.sup.append((stronger.value, weaker.value, stronger.span))

    def claim_stmt(self) -> None:
        span = self.peek().span
        self.expect("COLON", "':'")
        literals = [self.literal()]
        while self.peek().kind == "COMMA":
            self.advance()
            literals.append(self.literal())
        if self.claim is not None:
            self.errors.append(ParseError(span, "duplicate claim statement"))
            return
        self.claim = literals

    def game_stmt(self) -> None:
        token = self.expect("WORD", "a pool name (pr, def or common)")
        if token.value not in (PR, DEF, "common"):
            self.fail(f"unknown pool {token.value!r}", (PR, DEF, "common"))
        self.expect("COLON", "':'")
        ids = [self.expect("WORD", "a rule id")]
        while self.peek().kind == "COMMA":
            self.advance()
            ids.append(self.expect("WORD", "a rule id"))
        bucket = self.sections.setdefault(token.value, [])
        bucket.extend((t.value, t.span) for t in ids)

    def standard_stmt(self) -> None:
        which = self.expect("WORD", "'evidential' or 'deontic'")
        if which.value not in ("evidential", "deontic"):
            self.fail(f"unknown standard kind {which.value!r}",
                      ("evidential", "deontic"))
        token = self.expect("WORD", "a proof tag (d, p, s or w)")
        if token.value not in TAG_FOR_TOKEN:
            self.fail(f"unknown proof tag {token.value!r}", ("d", "p", "s", "w"))
        if which.value == "deontic" and token.value not in ("d", "p"):
            self.fail("deontic standard must be d or p", ("d", "p"))
        if which.value in self.standards:
            self.errors.append(ParseError(
                token.span, f"duplicate {which.value} standard"))
            return
        self.standards[which.value] = TAG_FOR_TOKEN[token.value]


class _Bail(Exception):
    pass


def parse_theory(text: str) -> GameSetup:
    """Parse a setup file.  Raises ParseFailure carrying every error
    found (recovery is per statement)."""
    tokens, lex_errors = _tokenize(text)
    parser = _Parser(tokens, lex_errors)
    parser.parse()
    errors = parser.errors

    declared = {rule.id: rule for rule in parser.rules}
    for stronger, weaker, span in parser.sup:
        for name in (stronger, weaker):
            if name not in declared:
                errors.append(ParseError(
                    span, f"superiority references unknown rule id {name!r}"))
    owner: dict[str, str] = {}
    for section, entries in parser.sections.items():
        for rule_id, span in entries:
            if rule_id not in declared:
                errors.append(ParseError(
                    span, f"game section references unknown rule id {rule_id!r}"))
            elif rule_id in owner:
                errors.append(ParseError(
                    span, f"rule id {rule_id!r} assigned to more than one pool"))
            else:
                owner[rule_id] = section

    if errors:
        raise ParseFailure(sorted(errors, key=lambda e: (e.span.line, e.span.col)))

    pools: dict[str, list[Rule]] = {PR: [], DEF: [], "common": []}
    for rule in parser.rules:
        pools[owner.get(rule.id, "common")].append(rule)
    return GameSetup(
        facts=frozenset(parser.facts),
        common_rules=tuple(pools["common"]),
        pr_rules=tuple(pools[PR]),
        def_rules=tuple(pools[DEF]),
        superiority=frozenset((a, b) for a, b, _ in parser.sup),
        claim=Claim(tuple(parser.claim)) if parser.claim is not None else None,
        evidential_standard=parser.standards.get("evidential", DELTA),
        deontic_standard=parser.standards.get("deontic", PARTIAL),
    )


_QUERY_RE = re.compile(
    r"([+-])([A-Za-z])\s+(?:(O)\s+)?(~)?([a-z][A-Za-z0-9_]*)\Z")


def parse_query(text: str) -> TaggedLiteral:
    """Parse a signed tagged query such as ``"+d b"`` or ``"-p O ~b"``."""
    match = _QUERY_RE.match(text.strip())
    if not match or match.group(2) not in TAG_FOR_TOKEN:
        raise ParseFailure([ParseError(
            SourceSpan(1, 1, len(text)),
            f"bad query {text!r}: expected e.g. '+d b' or '-p O ~b'",
            ("+", "-", "d", "p", "s", "w"))])
    sign, tag_token, mode, tilde, atom = match.groups()
    return TaggedLiteral(
        sign, TAG_FOR_TOKEN[tag_token],
        OBLIGATION if mode else EVIDENTIAL,
        Literal(atom, tilde is None))


def _render_antecedent(ant: Antecedent) -> str:
    parts = []
    if ant.sign is not None:
        parts.append(f"{ant.sign}{TOKEN_FOR_TAG[ant.tag]}")
    if ant.mode == OBLIGATION:
        parts.append("O")
    parts.append(str(ant.literal))
    return " ".join(parts)


def _render_rule(rule: Rule) -> str:
    ants = ", ".join(_render_antecedent(a) for a in rule.antecedents)
    arrow = "=>O" if rule.head_mode == OBLIGATION else "=>"
    return f"rule {rule.id}: {ants} {arrow} {rule.head}."


def serialize_theory(setup: GameSetup) -> str:
    """Canonical text form.  parse_theory(serialize_theory(s)) == s."""
    lines: list[str] = []
    for mode, literal in sorted(
            setup.facts, key=lambda f: (f[0] != EVIDENTIAL,
                                        literal_sort_key(f[1]))):
        marker = "O " if mode == OBLIGATION else ""
        lines.append(f"fact {marker}{literal}.")
    for rule in setup.all_rules():
        lines.append(_render_rule(rule))
    for stronger, weaker in sorted(setup.superiority):
        lines.append(f"sup {stronger} > {weaker}.")
    if setup.claim is not None:
        body = ", ".join(str(l) for l in setup.claim.literals)
        lines.append(f"claim: {body}.")
    named_pools = setup.pr_rules or setup.def_rules
    for section, rules in ((PR, setup.pr_rules), (DEF, setup.def_rules),
                           ("common", setup.common_rules)):
        if rules and (section != "common" or named_pools):
            ids = ", ".join(r.id for r in rules)
            lines.append(f"game {section}: {ids}.")
    if setup.evidential_standard != DELTA:
        token = TOKEN_FOR_TAG[setup.evidential_standard]
        lines.append(f"standard evidential {token}.")
    if setup.deontic_standard != PARTIAL:
        token = TOKEN_FOR_TAG[setup.deontic_standard]
        lines.append(f"standard deontic {token}.")
    return "".join(line + "\n" for line in lines)
