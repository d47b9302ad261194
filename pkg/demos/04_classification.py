#!/usr/bin/env python3
"""Irreducible, deterministic, algebraically irreducible: telling models apart.

Every relational model splits uniquely into connected components.  A
component whose sequence map is injective is a "point": any two of its
states are joined by the action of a single word.  Doubling the states
over each sequence keeps the model connected but destroys determinism,
which is exactly what the classifier reports.
"""

from penrel.reptheory import (
    SigmaSpec,
    are_equivalent,
    cantor_rep,
    classify,
    decompose,
    induced_from_sigma,
    sum_reps,
)
from penrel.seqspace import enumerate_seqs

LEVEL = 4


def doubled(level):
    seqs = enumerate_seqs(level)
    labels = tuple(f"{s}{tag}" for s in map(str, seqs) for tag in "ab")
    sigma = {f"{s}{tag}": q for q in seqs for s, tag in ((str(q), t) for t in "ab")}
    return induced_from_sigma(SigmaSpec(labels, (labels,), sigma))


print("-- the Cantor model is a point --")
print(classify(cantor_rep(LEVEL)).to_text())

print("\n-- the doubled model is connected but not deterministic --")
print(classify(doubled(LEVEL)).to_text())

print("\n-- a sum decomposes back into its parts --")
total = sum_reps([cantor_rep(3), doubled(3), cantor_rep(3)])
components, partition = decompose(total)
print(f"{total.size} states fall into {len(components)} components "
      f"of sizes {[len(block) for block in partition]}")

print("\n-- equivalence is relabelling --")
relabelled = induced_from_sigma(
    SigmaSpec(
        tuple(f"x{i}" for i in range(len(enumerate_seqs(3)))),
        (tuple(f"x{i}" for i in range(len(enumerate_seqs(3)))),),
        {f"x{i}": s for i, s in enumerate(enumerate_seqs(3))},
    )
)
result = are_equivalent(cantor_rep(3), relabelled)
print("cantor(3) ~ relabelled copy:", result.equivalent)
for src, dst in sorted(result.bijection.items()):
    print(f"  {src} -> {dst}")
