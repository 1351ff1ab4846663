"""Couples games: weak-core membership and the always-working construction.

Four couples share a sports night.  Every vertex is one person, every
player one couple, and an edge says those two people are happy to play
against each other.  A matching is stable for the weak core when no group
of couples could re-pair so that EVERY couple in the group gets more of
its members on court.
"""

from ntumatch import (
    Graph,
    Instance,
    Matching,
    normalize,
    utility,
    weak_construct,
    weak_membership,
)

couples = [(0, 1), (2, 3), (4, 5), (6, 7)]
# who is willing to play whom
edges = [(0, 2), (1, 3), (2, 4), (5, 6), (5, 7), (0, 7)]
inst = Instance(Graph(8, edges), tuple(frozenset(c) for c in couples))
game = normalize(inst)

print("== a tempting but unstable matching ==")
m = Matching([(2, 4), (5, 6)])
res = weak_membership(game, m)
print(f"matching {list(m.edges)} -> utilities {utility(inst, m)}")
print(f"in weak core? {res.in_core}")
if not res.in_core:
    c = res.certificate
    print(f"blocked by couples {c.coalition}: they could play {list(c.witness.edges)}")

print()
print("== the constructive solution ==")
m_star = weak_construct(game)
print(f"constructed matching: {list(m_star.edges)}")
print(f"utilities: {utility(inst, m_star)}")
print(f"in weak core? {weak_membership(game, m_star).in_core}")
print("the construction never fails: with couples, the weak core is never empty")
