"""Cross-checking the engine against explicit argument trees.

The inference engine never materializes arguments; it runs a fixpoint
over proof tags.  As an independent check this module rebuilds every
finite argument a theory supports, computes the grounded extension of
their attack graph, and compares justified conclusions against the
engine's strictest positive tag.

The comparison is exact on theories without superiority and without
support cycles.  A cycle lets a conclusion hang in the air: the engine
can neither prove nor refute a => a, while the tree view simply finds
no argument.  delta_equivalence_check reports such caveats instead of
pretending the answer is authoritative.
"""

from trialogic import (
    build_arguments, build_attack_graph, corpus, delta_equivalence_check,
    grounded_extension, parse_theory,
)

AMBIGUITY = """
fact a.
fact b.
fact g.

rule n1: a => c.
rule n2: b => ~c.
rule n3: g => e.
rule n4: c => ~e.
"""


def main() -> None:
    theory = parse_theory(AMBIGUITY).union_theory()
    arguments = build_arguments(theory)
    print(f"{len(arguments)} finite arguments:")
    for argument in arguments:
        print(f"  {argument}")

    graph = build_attack_graph(theory, arguments)
    justified = grounded_extension(graph)
    print("grounded extension (survives every attack):")
    for argument in sorted(justified, key=str):
        print(f"  {argument}")

    report = delta_equivalence_check(theory)
    print(f"engine agreement: {report.agrees}, "
          f"authoritative: {report.authoritative}")
    print()

    # The same check across a seeded random corpus.  Stratified
    # generation forbids support cycles, so every report is exact.
    disagreements = 0
    checked = 0
    for seed in range(200):
        random_theory = corpus.random_theory(
            seed, allow_superiority=False, stratified=True)
        report = delta_equivalence_check(random_theory)
        assert report.authoritative
        checked += report.checked
        disagreements += len(report.discrepancies)
    print(f"200 random theories, {checked} conclusions compared, "
          f"{disagreements} disagreements")


if __name__ == "__main__":
    main()
