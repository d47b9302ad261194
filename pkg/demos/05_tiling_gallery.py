#!/usr/bin/env python3
"""From triangles to sequences and back, plus a small SVG gallery.

Inflating a large tile N times yields a fragment whose level-0 tiles
are in bijection with the admissible sequences of length N via their
ancestor type chains.  Points in the fragment's interior generate the
sequence of the tile they sit in, the decorations obey the matching
rules, and the representation on the leaves is the Cantor model in
disguise.

Writes penrose_order{5,7}.svg and penrose_decorated.svg next to the
working directory.
"""

from penrel.reptheory import cantor_rep, is_equivalence_bijection
from penrel.tiling import (
    SvgOptions,
    geometric_rep,
    inflate,
    leaf_address,
    leaf_to_seq,
    matching_check,
    point_to_sequence,
    render_svg,
)

for order in (1, 2, 3, 4, 5):
    tree = inflate("L", order)
    print(f"order {order}: {len(tree.leaves):3d} leaves;",
          "addresses:", " ".join(leaf_address(tree, leaf) for leaf in tree.leaves[:6]),
          "..." if len(tree.leaves) > 6 else "")

tree = inflate("L", 5)
print("\nsequences of the first five leaves:",
      [str(leaf_to_seq(tree, leaf)) for leaf in tree.leaves[:5]])

# Points inside tiles generate the tile's sequence.
sample = tree.leaves[7].centroid()
print(f"the point {sample} generates", point_to_sequence(tree, sample))

# Decorations agree across every interior edge.
print(matching_check(tree).to_text())

# The leaf representation is the Cantor representation relabelled.
rep = geometric_rep(tree)
mapping = {leaf_address(tree, leaf): str(leaf_to_seq(tree, leaf)) for leaf in tree.leaves}
print("geometric = Cantor under the leaf bijection:",
      is_equivalence_bijection(rep, cantor_rep(5), mapping))

# Gallery.
for order in (5, 7):
    name = f"penrose_order{order}.svg"
    with open(name, "w", encoding="utf-8") as fh:
        fh.write(render_svg(inflate("L", order)))
    print("wrote", name)

decorated = SvgOptions(vertex_colors=True, arrows=True, outline_level=2)
with open("penrose_decorated.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg(inflate("L", 4), decorated))
print("wrote penrose_decorated.svg")
