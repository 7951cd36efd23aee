"""Disclosure as strategy in a two-party proof game.

The prosecutor and the defence each hold private rules.  Whatever a
player discloses becomes common knowledge the opponent can build on, so
proving a claim the shortest way and proving it safely are different
problems.  Here the prosecutor can establish the charge b directly
(r1) or through the intermediate c (r2 + r3); the defence can only
unravel the proof if c is on the table.
"""

from trialogic import (
    FULL_DISCLOSURE, GREEDY_MINIMAL, GameTrace,
    analyze, auto_play, minimal_winning_opening, parse_moves, parse_theory,
    run_game,
)

SETUP = """
fact a.
fact d.
fact f.
fact g.

rule r1: a => b.
rule r2: d => c.
rule r3: c => b.
rule r4: g =>O ~b.
rule r4a: c => e.
rule r5: e, f => ~b.
rule r6: c =>O ~b.

claim: b.

game pr: r1, r2, r3, r4.
game def: r4a, r5, r6.
"""

CARELESS_LINE = """
pr: r2, r3, r4.
def: r4a, r5 targets E b.
pr: pass.
def: pass.
"""


def show(trace: GameTrace, label: str) -> None:
    print(f"{label}:")
    for i, record in enumerate(trace.records, start=1):
        if record.rule_ids:
            print(f"  {i}. {record.player} plays {', '.join(record.rule_ids)}")
        else:
            print(f"  {i}. {record.player} passes")
    print(f"  outcome: {trace.outcome}")
    print()


def main() -> None:
    setup = parse_theory(SETUP)

    # Scripted play: the prosecutor proves b through c, and the
    # disclosed c is exactly what r4a and r5 need to rebut it.
    show(run_game(setup, parse_moves(CARELESS_LINE)), "careless route")

    # The greedy policy discloses as little as possible and never
    # hands c over.
    show(auto_play(setup, GREEDY_MINIMAL), "greedy policy")

    # Full disclosure dumps every rule, including the losing route.
    show(auto_play(setup, FULL_DISCLOSURE), "full disclosure")

    analysis = analyze(setup)
    print(f"winner under exhaustive play: {analysis.winner}")
    print(f"smallest safe opening: {minimal_winning_opening(setup)}")
    print(f"positions explored: {analysis.states_explored}")


if __name__ == "__main__":
    main()
