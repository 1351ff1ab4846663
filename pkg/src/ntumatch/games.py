"""Partitioned matching games with non-transferable utilities.

An instance is a graph plus a partition of its vertices into players; a
player's utility under a matching is how many of its vertices are covered.
This module holds the definitional machinery: utilities, blocking-coalition
search through coverage quotas, and core membership by coalition
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Optional

from .errors import InputError, InvariantError, ResourceLimitError
from .graphs import Graph, Matching, induced_subgraph
from .matroids import PartitionQuota, matching_with_lower_bounds

DEFAULT_MAX_PLAYERS = 20


@dataclass(frozen=True)
class Instance:
    """A graph together with a partition of its vertices into players."""

    graph: Graph
    players: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "players", tuple(frozenset(p) for p in self.players)
        )
        seen: set[int] = set()
        for i, p in enumerate(self.players):
            if not p:
                raise InputError(f"player {i} is empty")
            if seen & p:
                raise InputError(f"player {i} overlaps another player")
            seen |= p
        if seen != set(range(self.graph.n)):
            raise InputError("players must partition the vertex set")

    @cached_property
    def player_of(self) -> dict[int, int]:
        d: dict[int, int] = {}
        for i, p in enumerate(self.players):
            for v in p:
                d[v] = i
        return d

    @property
    def num_players(self) -> int:
        return len(self.players)


@dataclass(frozen=True)
class BlockCertificate:
    """A coalition with a witness matching that blocks a challenged matching.

    ``kind`` names the blocking discipline: a ``strong`` block makes every
    coalition member strictly better off, a ``weak`` block makes everyone
    at least as well off and someone strictly better.
    """

    coalition: tuple[int, ...]
    witness: Matching
    kind: str

    def validate(self, inst: Instance, challenged: tuple[int, ...]) -> None:
        if self.kind not in ("strong", "weak"):
            raise InvariantError(f"unknown block kind {self.kind!r}")
        members = set(self.coalition)
        if not members or len(members) != len(self.coalition):
            raise InvariantError("coalition must be a non-empty set of players")
        allowed: set[int] = set()
        for i in self.coalition:
            if not (0 <= i < inst.num_players):
                raise InvariantError(f"player {i} out of range")
            allowed |= inst.players[i]
        self.witness.validate_for(inst.graph)
        if not self.witness.covered <= allowed:
            raise InvariantError("witness leaves the coalition's vertex set")
        improved = False
        for i in self.coalition:
            gain = len(inst.players[i] & self.witness.covered)
            if self.kind == "strong":
                if gain <= challenged[i]:
                    raise InvariantError(
                        f"player {i} does not strictly improve in a strong block"
                    )
                improved = True
            else:
                if gain < challenged[i]:
                    raise InvariantError(f"player {i} is worse off in a weak block")
                if gain > challenged[i]:
                    improved = True
        if not improved:
            raise InvariantError("no player strictly improves")


@dataclass(frozen=True)
class MembershipResult:
    in_core: bool
    certificate: Optional[BlockCertificate]


def utility(inst: Instance, m: Matching) -> tuple[int, ...]:
    """Per-player count of matched vertices; the sole determinant of core
    membership."""
    m.validate_for(inst.graph)
    return tuple(len(p & m.covered) for p in inst.players)


@lru_cache(maxsize=1 << 13)
def _coalition_subgraph(
    graph: Graph, players: tuple[frozenset[int], ...], coalition: tuple[int, ...]
):
    verts = sorted(set().union(*(players[i] for i in coalition)))
    sub, to_old = induced_subgraph(graph, verts)
    to_new = {v: i for i, v in enumerate(to_old)}
    groups = tuple(
        frozenset(to_new[v] for v in players[i]) for i in coalition
    )
    return sub, to_old, groups


def find_block_for_coalition(
    inst: Instance,
    u: tuple[int, ...],
    coalition: tuple[int, ...],
    kind: str,
) -> Optional[Matching]:
    """A matching inside the coalition's induced subgraph that blocks
    utility vector ``u``, or None.

    A strong block needs every member above its current utility, realised
    as coverage quotas ``u_i + 1``.  A weak block is sought pivot by pivot:
    one member must improve strictly while the others keep their level.
    """
    if kind not in ("strong", "weak"):
        raise InputError("kind must be 'strong' or 'weak'")
    coalition = tuple(sorted(set(coalition)))
    if not coalition:
        raise InputError("coalition must be non-empty")
    for i in coalition:
        if not (0 <= i < inst.num_players):
            raise InputError(f"player {i} out of range")
    sub, to_old, groups = _coalition_subgraph(inst.graph, inst.players, coalition)
    sizes = [len(g) for g in groups]

    def attempt(quotas: tuple[int, ...]) -> Optional[Matching]:
        found = matching_with_lower_bounds(sub, PartitionQuota(groups, quotas))
        if found is None:
            return None
        return Matching((to_old[a], to_old[b]) for a, b in found.edges)

    if kind == "strong":
        quotas = tuple(u[i] + 1 for i in coalition)
        if any(q > s for q, s in zip(quotas, sizes)):
            return None
        return attempt(quotas)
    for pivot_pos, pivot in enumerate(coalition):
        if u[pivot] + 1 > sizes[pivot_pos]:
            continue
        quotas = tuple(
            u[i] + 1 if i == pivot else u[i] for i in coalition
        )
        hit = attempt(quotas)
        if hit is not None:
            return hit
    return None


def core_membership_by_enumeration(
    inst: Instance,
    m: Matching,
    kind: str,
    max_players: int = DEFAULT_MAX_PLAYERS,
) -> MembershipResult:
    """Definitional core test: try every coalition, smallest first.

    ``kind`` selects the core: the weak core forbids strongly blocking
    coalitions, the strong core forbids weakly blocking ones.  Coalitions
    are enumerated by size then lexicographically, so the returned
    certificate is deterministic.
    """
    if kind not in ("weak", "strong"):
        raise InputError("kind must be 'weak' or 'strong'")
    if inst.num_players > max_players:
        raise ResourceLimitError(
            f"{inst.num_players} players exceeds the enumeration guard "
            f"({max_players}); use the couples solver or the oracle"
        )
    u = utility(inst, m)
    block_kind = "strong" if kind == "weak" else "weak"
    for size in range(1, inst.num_players + 1):
        for coalition in combinations(range(inst.num_players), size):
            witness = find_block_for_coalition(inst, u, coalition, block_kind)
            if witness is not None:
                cert = BlockCertificate(coalition, witness, block_kind)
                cert.validate(inst, u)
                return MembershipResult(False, cert)
    return MembershipResult(True, None)
