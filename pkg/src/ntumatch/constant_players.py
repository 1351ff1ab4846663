"""Core computations driven by achievable utility vectors.

Membership depends only on how many vertices each player has covered, so
for few players the whole game collapses onto the component-wise maximal
achievable utility vectors: a core is non-empty exactly when some maximal
vector admits an unblocked realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InputError, InvariantError, ResourceLimitError
from .games import (
    Instance,
    MembershipResult,
    core_membership_by_enumeration,
    utility,
)
from .graphs import Matching, coverage_rank, max_matching
from .matroids import PartitionQuota, matching_with_lower_bounds

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class AchievableFrontier:
    """Component-wise maximal achievable utility vectors, sorted."""

    maximal_vectors: tuple[tuple[int, ...], ...]


def achievable(inst: Instance, x: tuple[int, ...]) -> Optional[Matching]:
    """A matching covering at least ``x_i`` vertices of every player, or
    None; delegates to the coverage-quota solver."""
    if len(x) != inst.num_players:
        raise InputError("vector length must match the player count")
    for xi, p in zip(x, inst.players):
        if not (0 <= xi <= len(p)):
            raise InputError(f"target {xi} out of range for a player of size {len(p)}")
    return matching_with_lower_bounds(
        inst.graph, PartitionQuota(inst.players, tuple(x))
    )


def _rank_vector(inst: Instance) -> list[int]:
    """Coverage rank of every union of players, indexed by bitmask."""
    m = inst.num_players
    ranks = [0] * (1 << m)
    for mask in range(1, 1 << m):
        union: set[int] = set()
        mm = mask
        i = 0
        while mm:
            if mm & 1:
                union |= inst.players[i]
            mm >>= 1
            i += 1
        ranks[mask] = coverage_rank(inst.graph, frozenset(union))
    return ranks


def frontier(inst: Instance, budget: int = DEFAULT_BUDGET) -> AchievableFrontier:
    """All component-wise maximal achievable utility vectors.

    Enumerates the capped product lattice with down-closed pruning; every
    maximal vector covers exactly twice the maximum matching size, so only
    that shell needs the full feasibility test.
    """
    sizes = [len(p) for p in inst.players]
    lattice = 1
    for s in sizes:
        lattice *= s + 1
        if lattice > budget:
            raise ResourceLimitError(
                f"utility lattice of size > {budget} exceeds the budget"
            )
    m = inst.num_players
    total = 2 * max_matching(inst.graph).size
    ranks = _rank_vector(inst)
    # masks whose highest set player index is exactly i: checking them as
    # soon as coordinate i is fixed prunes every descendant of an
    # over-demanding prefix (feasibility is down-closed) and, summed over
    # the path to a leaf, covers every mask
    top_masks = [
        [mask for mask in range(1, 1 << m) if mask >> i & 1 and mask < 1 << (i + 1)]
        for i in range(m)
    ]
    bit_lists = [
        [i for i in range(m) if mask >> i & 1] for mask in range(1 << m)
    ]

    out: list[tuple[int, ...]] = []
    suffix_caps = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_caps[i] = suffix_caps[i + 1] + sizes[i]

    def rec(prefix: list[int], acc: int):
        i = len(prefix)
        if acc > total:
            return
        if i == m:
            if acc == total:
                out.append(tuple(prefix))
            return
        if acc + suffix_caps[i] < total:
            return
        for xi in range(sizes[i] + 1):
            prefix.append(xi)
            ok = True
            for mask in top_masks[i]:
                if sum(prefix[b] for b in bit_lists[mask]) > ranks[mask]:
                    ok = False
                    break
            if ok:
                rec(prefix, acc + xi)
            prefix.pop()

    rec([], 0)
    out.sort()
    return AchievableFrontier(tuple(out))


@dataclass(frozen=True)
class CoreOutcome:
    vector: tuple[int, ...]
    witness: Matching
    membership: MembershipResult


def core_outcomes(
    inst: Instance, kind: str, budget: int = DEFAULT_BUDGET
) -> Iterator[CoreOutcome]:
    """Blocked/unblocked verdicts for every maximal utility vector.

    Vectors are realized exactly (any realization of a maximal vector is a
    maximum matching), processed in lexicographically decreasing order.
    """
    if inst.num_players > 20:
        raise ResourceLimitError("core computation guard: more than 20 players")
    fr = frontier(inst, budget)
    for x in reversed(fr.maximal_vectors):
        witness = achievable(inst, x)
        if witness is None:
            raise InvariantError("frontier vector is not achievable")
        realized = utility(inst, witness)
        if realized != x:
            raise InvariantError("maximal vector realized inexactly")
        yield CoreOutcome(x, witness, core_membership_by_enumeration(inst, witness, kind))


def core_empty(
    inst: Instance, kind: str, budget: int = DEFAULT_BUDGET
) -> Optional[Matching]:
    """A matching in the requested core, or None when that core is empty.

    It suffices to test one realization per maximal achievable vector:
    membership depends only on the utility vector, and every unblocked
    matching is dominated by some maximal vector whose realization is then
    unblocked too.
    """
    for outcome in core_outcomes(inst, kind, budget):
        if outcome.membership.in_core:
            return outcome.witness
    return None
