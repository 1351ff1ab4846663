"""Generalized partition matroid, matching matroid, and their intersection.

The intersection drives every "matching with per-group coverage lower
bounds" query in the library: a matching with ``|V(M) ∩ V_i| >= q_i`` for
all groups exists exactly when the two matroids share an independent set
of size ``sum(q_i)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .errors import InputError, InvariantError
from .graphs import Graph, Matching, coverable, coverage_rank, max_matching


@dataclass(frozen=True)
class PartitionQuota:
    """Disjoint vertex groups with per-group quotas."""

    groups: tuple[frozenset[int], ...]
    quotas: tuple[int, ...]

    def __post_init__(self):
        if len(self.groups) != len(self.quotas):
            raise InputError("groups and quotas must align")
        seen: set[int] = set()
        for grp, q in zip(self.groups, self.quotas):
            if seen & grp:
                raise InputError("groups must be pairwise disjoint")
            seen |= grp
            if not (0 <= q <= len(grp)):
                raise InputError(f"quota {q} out of range for group of size {len(grp)}")

    @property
    def rank(self) -> int:
        return sum(self.quotas)

    def indep(self, x: frozenset[int]) -> bool:
        return all(len(x & grp) <= q for grp, q in zip(self.groups, self.quotas))


class MatchingMatroid:
    """Independence oracle: a vertex set is independent when some matching
    covers it.  Memoised per instance; the underlying decomposition is
    cached per graph."""

    def __init__(self, g: Graph):
        self.g = g
        self._memo: dict[frozenset[int], bool] = {}

    def indep(self, x: frozenset[int]) -> bool:
        hit = self._memo.get(x)
        if hit is None:
            hit = coverage_rank(self.g, x) == len(x)
            self._memo[x] = hit
        return hit


def matroid_intersection_max(
    indep_a: Callable[[frozenset], bool],
    indep_b: Callable[[frozenset], bool],
    ground: Iterable[int],
    seed: frozenset = frozenset(),
) -> frozenset:
    """Maximum-cardinality common independent set, by exchange-graph
    augmentation with BFS shortest paths and lowest-id tie-breaking."""
    ground_t = tuple(sorted(set(ground)))
    current: set = set(seed)
    if not current <= set(ground_t):
        raise InputError("seed is not a subset of the ground set")
    if current:
        cur_f = frozenset(current)
        if not indep_a(cur_f) or not indep_b(cur_f):
            raise InputError("seed is not independent in both matroids")

    memo_a: dict[frozenset, bool] = {}
    memo_b: dict[frozenset, bool] = {}

    def a(s: frozenset) -> bool:
        r = memo_a.get(s)
        if r is None:
            r = indep_a(s)
            memo_a[s] = r
        return r

    def b(s: frozenset) -> bool:
        r = memo_b.get(s)
        if r is None:
            r = indep_b(s)
            memo_b[s] = r
        return r

    while True:
        cur = frozenset(current)
        outside = [y for y in ground_t if y not in current]
        sources = [y for y in outside if a(cur | {y})]
        sinks = {y for y in outside if b(cur | {y})}
        if not sources or not sinks:
            break
        direct = sorted(set(sources) & sinks)
        if direct:
            current.add(direct[0])
            continue
        # BFS over the exchange digraph:
        #   y in I  -> z not in I   when I - y + z independent in A
        #   z not in I -> y in I    when I - y + z independent in B
        parent: dict[int, Optional[int]] = {s: None for s in sources}
        queue = deque(sources)
        found = None
        inside = sorted(current)
        while queue and found is None:
            x = queue.popleft()
            if x in current:
                nxts = [
                    z
                    for z in outside
                    if z not in parent and a(cur - {x} | {z})
                ]
            else:
                nxts = [
                    y
                    for y in inside
                    if y not in parent and b(cur - {y} | {x})
                ]
            for z in nxts:
                parent[z] = x
                if z not in current and z in sinks:
                    found = z
                    break
                queue.append(z)
        if found is None:
            break
        path = []
        node: Optional[int] = found
        while node is not None:
            path.append(node)
            node = parent[node]
        for v in path:
            if v in current:
                current.remove(v)
            else:
                current.add(v)
        nxt_f = frozenset(current)
        if not (a(nxt_f) and b(nxt_f)):
            raise InvariantError("augmentation produced a dependent set")
    return frozenset(current)


@lru_cache(maxsize=1 << 15)
def _group_union_rank(g: Graph, groups: tuple[frozenset[int], ...], mask: int) -> int:
    union: set[int] = set()
    i = 0
    while mask:
        if mask & 1:
            union |= groups[i]
        mask >>= 1
        i += 1
    return coverage_rank(g, frozenset(union))


def quota_feasible(g: Graph, pq: PartitionQuota) -> bool:
    """Feasibility of the coverage lower bounds, without a witness.

    By matroid-intersection duality specialised to a partition matroid, a
    matching with ``|V(M) ∩ V_i| >= q_i`` exists iff every union of groups
    can be covered to the extent of its summed quotas.
    """
    groups = pq.groups
    k = len(groups)
    if k > 20:
        raise InputError("quota_feasible supports at most 20 groups")
    for mask in range(1, 1 << k):
        need = 0
        i = 0
        mm = mask
        while mm:
            if mm & 1:
                need += pq.quotas[i]
            mm >>= 1
            i += 1
        if need > _group_union_rank(g, groups, mask):
            return False
    return True


def matching_with_lower_bounds(g: Graph, pq: PartitionQuota) -> Optional[Matching]:
    """A matching meeting every per-group coverage quota, or None.

    Vertices outside all groups are unconstrained.  The search first
    screens feasibility via :func:`quota_feasible` (when the group count
    permits), then builds a witness: a maximum common independent set of
    the matching matroid and the partition matroid, extended to a matching
    with :func:`~ntumatch.graphs.coverable`.
    """
    active = [
        (grp, q) for grp, q in zip(pq.groups, pq.quotas) if q > 0
    ]
    if not active:
        return Matching(())
    groups = tuple(grp for grp, _ in active)
    quotas = tuple(q for _, q in active)
    pq_active = PartitionQuota(groups, quotas)
    want = pq_active.rank

    screened = None
    if len(groups) <= 16:
        screened = quota_feasible(g, pq_active)
        if not screened:
            return None

    ground = sorted(set().union(*groups))
    mm = MatchingMatroid(g)

    # warm start: trim a maximum matching's coverage to the quotas
    base = max_matching(g)
    seed: set[int] = set()
    for grp, q in zip(groups, quotas):
        seed.update(sorted(grp & base.covered)[:q])

    def indep_partition(x: frozenset) -> bool:
        return pq_active.indep(x)

    common = matroid_intersection_max(
        indep_partition, mm.indep, ground, seed=frozenset(seed)
    )
    if len(common) < want:
        if screened:
            raise InvariantError(
                "feasibility screen and intersection disagree"
            )
        return None
    witness = coverable(g, common)
    if witness is None:
        raise InvariantError("common independent set is not coverable")
    return witness
