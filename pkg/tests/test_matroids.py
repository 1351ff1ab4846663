from itertools import combinations

import pytest

from ntumatch import (
    InputError,
    MatchingMatroid,
    PartitionQuota,
    matching_with_lower_bounds,
    matroid_intersection_max,
    quota_feasible,
)
from ntumatch.exhaustive import all_matchings, coverable_sets_brute

from conftest import path_graph, random_graph


def partition_indep(groups, quotas):
    def indep(x):
        return all(len(x & g) <= q for g, q in zip(groups, quotas))

    return indep


def brute_max_common(indep_a, indep_b, ground):
    best = 0
    gl = sorted(ground)
    for r in range(len(gl), -1, -1):
        for combo in combinations(gl, r):
            s = frozenset(combo)
            if indep_a(s) and indep_b(s):
                return r
    return best


class TestIntersection:
    def test_free_matroids(self):
        free = lambda s: True
        got = matroid_intersection_max(free, free, [10, 20, 30])
        assert got == frozenset({10, 20, 30})

    def test_two_partition_matroids(self):
        # quota 1 on {a,b} versus quota 1 on {b,c}: brute force max 2
        a = partition_indep([frozenset({0, 1})], [1])
        b = partition_indep([frozenset({1, 2})], [1])
        got = matroid_intersection_max(a, b, [0, 1, 2])
        assert len(got) == 2 == brute_max_common(a, b, [0, 1, 2])
        assert a(got) and b(got)

    def test_matching_vs_partition(self):
        # path on three vertices versus all-singleton quotas: brute max 2
        g = path_graph(3)
        mm = MatchingMatroid(g)
        pr = partition_indep(
            [frozenset({0}), frozenset({1}), frozenset({2})], [1, 1, 1]
        )
        got = matroid_intersection_max(pr, mm.indep, range(3))
        assert len(got) == 2 == brute_max_common(pr, mm.indep, range(3))

    def test_random_agreement_with_brute_force(self, rng):
        for _ in range(40):
            n = rng.randint(1, 7)
            g = random_graph(rng, n, 0.5)
            mm = MatchingMatroid(g)
            verts = list(range(n))
            rng.shuffle(verts)
            cut = rng.randint(1, n)
            groups = [frozenset(verts[:cut]), frozenset(verts[cut:])]
            groups = [x for x in groups if x]
            quotas = [rng.randint(0, len(x)) for x in groups]
            pr = partition_indep(groups, quotas)
            got = matroid_intersection_max(pr, mm.indep, range(n))
            assert pr(got) and mm.indep(got)
            assert len(got) == brute_max_common(pr, mm.indep, range(n))

    def test_exchange_axiom_spot_check(self, rng):
        # matching matroid: a smaller independent set can always borrow
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 7), 0.5)
            mm = MatchingMatroid(g)
            sets = [s for s in coverable_sets_brute(g)]
            small = rng.choice(sets)
            big = rng.choice(sets)
            if len(small) >= len(big):
                continue
            assert any(
                mm.indep(frozenset(small | {x})) for x in big - small
            )


class TestLowerBounds:
    def test_all_zero_quotas(self):
        g = path_graph(3)
        pq = PartitionQuota((frozenset({0}), frozenset({2})), (0, 0))
        got = matching_with_lower_bounds(g, pq)
        assert got is not None and got.size == 0

    def test_conflicting_singletons(self):
        g = path_graph(3)
        pq = PartitionQuota((frozenset({0}), frozenset({2})), (1, 1))
        assert matching_with_lower_bounds(g, pq) is None

    def test_quota_above_group_size_rejected(self):
        with pytest.raises(InputError):
            PartitionQuota((frozenset({0}),), (2,))

    def test_overlapping_groups_rejected(self):
        with pytest.raises(InputError):
            PartitionQuota((frozenset({0, 1}), frozenset({1})), (1, 1))

    def test_random_agreement_and_monotonicity(self, rng):
        for _ in range(60):
            n = rng.randint(1, 9)
            g = random_graph(rng, n, rng.choice([0.25, 0.5]))
            verts = list(range(n))
            rng.shuffle(verts)
            k = rng.randint(1, min(4, n))
            groups = []
            idx = 0
            for i in range(k):
                take = max(1, (n - idx) // (k - i))
                groups.append(frozenset(verts[idx: idx + take]))
                idx += take
                if idx >= n:
                    break
            quotas = tuple(rng.randint(0, len(x)) for x in groups)
            pq = PartitionQuota(tuple(groups), quotas)
            got = matching_with_lower_bounds(g, pq)
            want = any(
                all(len(m.covered & x) >= q for x, q in zip(groups, quotas))
                for m in all_matchings(g)
            )
            assert (got is not None) == want
            assert quota_feasible(g, pq) == want
            if got is not None:
                got.validate_for(g)
                assert all(
                    len(got.covered & x) >= q for x, q in zip(groups, quotas)
                )
                # decreasing any quota keeps the system feasible
                for i in range(len(quotas)):
                    if quotas[i] == 0:
                        continue
                    lowered = quotas[:i] + (quotas[i] - 1,) + quotas[i + 1:]
                    assert (
                        matching_with_lower_bounds(
                            g, PartitionQuota(tuple(groups), lowered)
                        )
                        is not None
                    )
