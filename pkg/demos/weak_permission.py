"""Permission as the failure of a prohibition.

Nobody writes rules that permit things; codes of conduct prohibit, and
whatever defeats a prohibition is thereby allowed.  Weak permission
makes that precise: conduct is weakly permitted when the obligation to
refrain is refuted, not merely unproven.

Two theories below share the prohibition a =>O ~b.  In the first it
stands alone and b stays unpermitted.  In the second a stronger duty
outweighs it, and b comes out weakly permitted with the refutation as
witness.
"""

from trialogic import parse_theory, weakly_permitted, lit

STANDING = """
fact a.
rule r4: a =>O ~b.
"""

DEFEATED = """
fact a.
rule r4: a =>O ~b.
rule r10: a =>O b.
sup r10 > r4.
"""


def describe(label: str, text: str) -> None:
    theory = parse_theory(text).union_theory()
    result = weakly_permitted(theory, lit("b"))
    print(f"{label}: b is {result.status}")
    if result.witness is not None:
        print(f"  witness: {result.witness.render_glyph()}")


def main() -> None:
    describe("prohibition unchallenged", STANDING)
    describe("prohibition outweighed  ", DEFEATED)

    # Silence is not permission: with no deontic rules at all the
    # prohibition is vacuously refuted, so an empty code permits
    # everything it never mentions.  Whether that is a feature depends
    # on the code.
    empty = parse_theory("fact a.\n").union_theory()
    print(f"no deontic rules at all : b is {weakly_permitted(empty, lit('b')).status}")


if __name__ == "__main__":
    main()
