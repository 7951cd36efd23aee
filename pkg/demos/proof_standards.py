"""How one body of evidence fares under four proof standards.

The same rules can prove a conclusion beyond reasonable doubt, by a
preponderance, only substantially, or merely to a scintilla, depending
on how much counter-evidence weighs against them.  This script builds a
small theory around an ambiguous intermediate fact and watches a
downstream conclusion survive at the blocking standard while falling at
the propagating one.
"""

from trialogic import (
    DELTA, EVIDENTIAL, PARTIAL, SIGMA, SIGMA_MINUS,
    compute_conclusions, lit, parse_theory, standards_met,
)

TAG_NAMES = {
    DELTA: "beyond reasonable doubt",
    PARTIAL: "preponderance",
    SIGMA: "substantial",
    SIGMA_MINUS: "scintilla",
}

THEORY = """
fact a.
fact b.
fact g.

rule n1: a => c.
rule n2: b => ~c.
rule n3: g => e.
rule n4: c => ~e.
"""


def main() -> None:
    theory = parse_theory(THEORY).union_theory()
    table = compute_conclusions(theory)

    print("c is claimed and denied by equally credible rules:")
    for literal in (lit("c"), lit("~c")):
        row = [tag for tag in TAG_NAMES
               if table.status(tag, EVIDENTIAL, literal) == "proved"]
        print(f"  {literal}: proved at {[TAG_NAMES[t] for t in row]}")

    print()
    print("e rests on g, but ~e rests on the contested c."
          " The standards split:")
    for literal in (lit("e"), lit("~e")):
        for tag, name in TAG_NAMES.items():
            status = table.status(tag, EVIDENTIAL, literal)
            print(f"  {name:>23}: {literal} is {status}")
        print()

    # The blocking standard lets e through because ~e never wins a
    # head-on comparison; the propagating one refuses to decide while
    # c itself is up in the air.
    report = standards_met(theory, lit("e"))
    print(f"standards met by e: {', '.join(report.met)}")
    report = standards_met(theory, lit("~e"))
    print(f"standards met by ~e: {', '.join(report.met) or 'none'}")


if __name__ == "__main__":
    main()
