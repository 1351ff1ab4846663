import pytest

from ntumatch import (
    Graph,
    InputError,
    Instance,
    ResourceLimitError,
    achievable,
    core_empty,
    core_membership_by_enumeration,
    frontier,
    gen_example1,
    gen_random,
    max_matching,
    utility,
)
from ntumatch.constant_players import core_outcomes
from ntumatch.exhaustive import all_matchings, oracle_core


class TestAchievable:
    def test_zero_vector(self):
        inst = Instance(Graph(2, [(0, 1)]), (frozenset({0}), frozenset({1})))
        assert achievable(inst, (0, 0)) is not None

    def test_full_vector_without_perfect_matching(self):
        inst = Instance(Graph(3, [(0, 1), (1, 2)]), (frozenset({0, 1, 2}),))
        assert achievable(inst, (3,)) is None

    def test_out_of_range_rejected(self):
        inst = Instance(Graph(2, [(0, 1)]), (frozenset({0}), frozenset({1})))
        with pytest.raises(InputError):
            achievable(inst, (2, 0))

    def test_random_against_enumeration(self, rng):
        for _ in range(30):
            n = rng.randint(2, 8)
            inst = gen_random(n, rng.randint(1, 4), rng.choice([0.3, 0.5]), seed=rng.randint(0, 10**6))
            vecs = {utility(inst, m) for m in all_matchings(inst.graph)}
            x = tuple(rng.randint(0, len(p)) for p in inst.players)
            want = any(all(a >= b for a, b in zip(v, x)) for v in vecs)
            got = achievable(inst, x)
            assert (got is not None) == want
            if got is not None:
                assert all(a >= b for a, b in zip(utility(inst, got), x))


class TestFrontier:
    def test_single_player_internal_edge(self):
        inst = Instance(Graph(2, [(0, 1)]), (frozenset({0, 1}),))
        assert frontier(inst).maximal_vectors == ((2,),)

    def test_example1_vectors_sum_to_sixteen(self):
        gen = gen_example1()
        fr = frontier(gen.instance)
        assert fr.maximal_vectors
        assert all(sum(v) == 16 for v in fr.maximal_vectors)

    def test_budget_guard(self):
        inst = gen_random(60, 12, 0.2, seed=3)
        with pytest.raises(ResourceLimitError):
            frontier(inst, budget=1000)

    def test_random_against_oracle(self, rng):
        for _ in range(40):
            n = rng.randint(2, 9)
            inst = gen_random(n, rng.randint(2, 5), rng.choice([0.25, 0.5]), seed=rng.randint(0, 10**6))
            if inst.num_players > 4:
                continue
            vecs = {utility(inst, m) for m in all_matchings(inst.graph)}
            maximal = {
                v
                for v in vecs
                if not any(w != v and all(a >= b for a, b in zip(w, v)) for w in vecs)
            }
            fr = frontier(inst)
            assert set(fr.maximal_vectors) == maximal
            nu2 = 2 * max_matching(inst.graph).size
            assert all(sum(v) == nu2 for v in fr.maximal_vectors)


class TestCoreEmpty:
    def test_perfect_matching_instance(self):
        inst = Instance(
            Graph(4, [(0, 1), (2, 3)]),
            (frozenset({0, 1}), frozenset({2, 3})),
        )
        for kind in ("weak", "strong"):
            m = core_empty(inst, kind)
            assert m is not None and m.covered == frozenset(range(4))

    def test_example1_both_cores_empty(self):
        gen = gen_example1()
        assert core_empty(gen.instance, "weak") is None
        assert core_empty(gen.instance, "strong") is None

    def test_random_against_oracle(self, rng):
        for _ in range(30):
            n = rng.randint(2, 9)
            inst = gen_random(n, rng.randint(2, 5), rng.choice([0.25, 0.5]), seed=rng.randint(0, 10**6))
            if inst.num_players > 4:
                continue
            for kind in ("weak", "strong"):
                oracle = oracle_core(inst, kind)
                got = core_empty(inst, kind)
                assert (got is not None) == (not oracle.empty)
                if got is not None:
                    assert core_membership_by_enumeration(inst, got, kind).in_core

    def test_outcomes_realize_vectors_exactly(self, rng):
        inst = gen_random(8, 3, 0.5, seed=99)
        for outcome in core_outcomes(inst, "weak"):
            assert utility(inst, outcome.witness) == outcome.vector

    def test_achievability_is_down_closed(self, rng):
        for _ in range(15):
            n = rng.randint(2, 7)
            inst = gen_random(n, 3, 0.4, seed=rng.randint(0, 10**6))
            x = tuple(rng.randint(0, len(p)) for p in inst.players)
            if achievable(inst, x) is None:
                continue
            for i in range(len(x)):
                if x[i] > 0:
                    y = x[:i] + (x[i] - 1,) + x[i + 1:]
                    assert achievable(inst, y) is not None
