"""Exact core solvers for partitioned matching games with non-transferable
utilities: matching engine, matroid layer, couples algorithms, frontier
solvers, hardness-gadget generators, and an exhaustive oracle."""

from .couples import (
    CouplesGame,
    StrongCoreStructure,
    delta_path_exists,
    normalize,
    on_alternating_cycle,
    ordered_triple_path_exists,
    strong_core_solve,
    strong_core_structure,
    strong_membership,
    weak_construct,
    weak_membership,
)
from .errors import InputError, InvariantError, ResourceLimitError
from .constant_players import (
    AchievableFrontier,
    achievable,
    core_empty,
    core_outcomes,
    frontier,
)
from .games import (
    BlockCertificate,
    Instance,
    MembershipResult,
    core_membership_by_enumeration,
    find_block_for_coalition,
    utility,
)
from .generators import (
    GeneratedInstance,
    X3CInstance,
    attach_special_edge,
    gen_3sat_weak_emptiness,
    gen_example1,
    gen_random,
    gen_x3c_strong,
    gen_x3c_weak,
)
from .graphs import (
    AlternatingForest,
    GallaiEdmonds,
    Graph,
    Matching,
    alternating_reach,
    coverable,
    coverage_rank,
    gallai_edmonds,
    matching_missing_exactly,
    max_matching,
    perfect_matching_exists,
)
from .matroids import (
    MatchingMatroid,
    PartitionQuota,
    matching_with_lower_bounds,
    matroid_intersection_max,
    quota_feasible,
)

__all__ = [
    "AchievableFrontier",
    "AlternatingForest",
    "BlockCertificate",
    "CouplesGame",
    "GallaiEdmonds",
    "GeneratedInstance",
    "Graph",
    "InputError",
    "Instance",
    "InvariantError",
    "Matching",
    "MatchingMatroid",
    "MembershipResult",
    "PartitionQuota",
    "ResourceLimitError",
    "StrongCoreStructure",
    "X3CInstance",
    "achievable",
    "alternating_reach",
    "attach_special_edge",
    "core_empty",
    "core_membership_by_enumeration",
    "core_outcomes",
    "coverable",
    "coverage_rank",
    "delta_path_exists",
    "find_block_for_coalition",
    "frontier",
    "gallai_edmonds",
    "gen_3sat_weak_emptiness",
    "gen_example1",
    "gen_random",
    "gen_x3c_strong",
    "gen_x3c_weak",
    "matching_missing_exactly",
    "matching_with_lower_bounds",
    "matroid_intersection_max",
    "max_matching",
    "normalize",
    "on_alternating_cycle",
    "ordered_triple_path_exists",
    "perfect_matching_exists",
    "quota_feasible",
    "strong_core_solve",
    "strong_core_structure",
    "strong_membership",
    "utility",
    "weak_construct",
    "weak_membership",
]
