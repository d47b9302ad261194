#!/usr/bin/env python3
"""The two axiom families and the grammar that writes them down.

The tiling theory speaks about observations <n L| / <n S| ("after a
translation the origin sits in a large / small tile of level n") with
temporal duals |n L> / |n S>.  The sequence theory says the same things
as assertions (s_n=0) / (s_n=1) about a 0/1 sequence, with reversal
written as a star.  Both are instantiated at a finite truncation: only
generator levels below L exist.
"""

from penrel.theory import (
    instantiate_pens,
    instantiate_pent,
    parse_term,
    print_term,
    rename_pent_to_pens,
)

LEVEL = 2

tiling_axioms = instantiate_pent(LEVEL)
print(f"tiling theory at truncation {LEVEL}: {len(tiling_axioms)} axioms\n")
for sequent in tiling_axioms:
    print(f"  {sequent.name:10s} {sequent}")

# The same schemas in sequence notation, axiom for axiom.
sequence_axioms = instantiate_pens(LEVEL)
print(f"\nsequence theory, same names, renamed terms (first five):")
for sequent in sequence_axioms[:5]:
    print(f"  {sequent.name:10s} {sequent}")

# The renaming works on any term: duals become stars.
term = parse_term("<2 L| ; |1 S> ; (<0 L| + <0 S|)")
print("\na term          :", print_term(term))
print("renamed         :", print_term(rename_pent_to_pens(term)))

# The printer and parser are exact inverses on normalized terms.
text = "(<1 L| + <1 S|)* ; |0 L>"
assert print_term(parse_term(text)) == text
print("round trip      :", text, "->", print_term(parse_term(text)))
