"""Hardness gadgets: reductions as instance generators.

Verifying core membership is hard once players may own three vertices.
The generators below build the reduction instances from exact-cover and
satisfiability inputs; on hand-sized inputs the library's exact solvers
confirm both directions of each reduction.
"""

from ntumatch import (
    X3CInstance,
    core_membership_by_enumeration,
    gen_3sat_weak_emptiness,
    gen_x3c_strong,
    gen_x3c_weak,
)
from ntumatch.constant_players import core_empty

print("== exact cover -> weak-core membership ==")
yes = X3CInstance(elements=3, sets=((1, 2, 3),))
no = X3CInstance(elements=3, sets=())
for name, x3c in (("yes", yes), ("no", no)):
    gen = gen_x3c_weak(x3c)
    res = core_membership_by_enumeration(gen.instance, gen.matching, "weak")
    print(f"  cover {name}-instance -> challenged matching in weak core: {res.in_core}")

print()
print("== exact cover -> strong-core membership ==")
for name, x3c in (("yes", yes), ("no", no)):
    gen = gen_x3c_strong(x3c)
    res = core_membership_by_enumeration(gen.instance, gen.matching, "strong")
    print(f"  cover {name}-instance -> challenged matching in strong core: {res.in_core}")

print()
print("== satisfiability -> weak-core emptiness ==")
gen = gen_3sat_weak_emptiness([(1, 1, 1)])
inst = gen.instance
print(f"  one-clause formula: {inst.graph.n} vertices, {inst.num_players} players, "
      f"{gen.name_map['_special_edges']} special edges")
got = core_empty(inst, "weak")
print(f"  formula satisfiable -> weak core non-empty: {got is not None}")
