#!/usr/bin/env python3
"""A tour of the binary-relation quantale Rel(X).

Relations on a finite state set form the algebra every model in this
package lives in: union is the join, diagrammatic composition the
product, reversal the involution, and the diagonal the unit.
"""

from penrel.relalg import Relation, connected_components, equivalence_closure, join

# A three-state set {0, 1, 2} and two relations on it.
r = Relation.from_pairs(3, [(0, 1), (1, 2)])
s = Relation.from_pairs(3, [(1, 1), (2, 0)])

print("r           =", sorted(r.pairs()))
print("s           =", sorted(s.pairs()))

# Composition reads left to right: first r, then s.
print("r ; s       =", sorted(r.compose(s).pairs()))
print("s ; r       =", sorted(s.compose(r).pairs()), "  (order matters)")

# The involution reverses pairs and anti-commutes with composition.
print("(r ; s)*    =", sorted(r.compose(s).converse().pairs()))
print("s* ; r*     =", sorted(s.converse().compose(r.converse()).pairs()))

# Joins are unions; the empty join is the bottom element.
print("r + s       =", sorted(join([r, s]).pairs()))
print("bottom      =", sorted(join([], size=3).pairs()))

# The unit is the diagonal.
e = Relation.identity(3)
assert r.compose(e) == r and e.compose(r) == r
print("r ; e == r  =", r.compose(e) == r)

# Reachability in both directions: the equivalence closure, and the
# partition of states it induces.
closure = equivalence_closure(Relation.from_pairs(5, [(0, 1), (3, 4)]))
print("closure of {(0,1),(3,4)} on 5 states =", sorted(closure.pairs()))
print("components                           =",
      connected_components(Relation.from_pairs(5, [(0, 1), (3, 4)])))
