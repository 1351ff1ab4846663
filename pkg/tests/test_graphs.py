import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntumatch import (
    Graph,
    InputError,
    Matching,
    alternating_reach,
    coverable,
    coverage_rank,
    gallai_edmonds,
    matching_missing_exactly,
    max_matching,
    perfect_matching_exists,
)
from ntumatch.exhaustive import (
    all_matchings,
    coverable_sets_brute,
    even_reach_brute,
)
from ntumatch.graphs import bipartition, induced_subgraph

from conftest import cycle_graph, path_graph, random_graph, random_matching


def graphs(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(
            lambda es: Graph(n, es),
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=n * (n - 1) // 2,
            ),
        )
    )


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            Graph(2, [(0, 2)])

    def test_deduplicates_orientation(self):
        g = Graph(3, [(2, 0), (0, 2)])
        assert g.edges == ((0, 2),)

    def test_matching_rejects_shared_vertex(self):
        with pytest.raises(InputError):
            Matching([(0, 1), (1, 2)])


class TestMaxMatching:
    def test_empty_graph(self):
        assert max_matching(Graph(3)).size == 0

    def test_path_three(self):
        assert max_matching(path_graph(3)).size == 1

    def test_seed_is_validated(self):
        with pytest.raises(InputError):
            max_matching(path_graph(3), Matching([(0, 2)]))

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, g):
        best = max((m.size for m in all_matchings(g)), default=0)
        assert max_matching(g).size == best

    def test_seed_coverage_preserved(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 10), 0.4)
            seed = random_matching(rng, g)
            result = max_matching(g, seed)
            assert seed.covered <= result.covered
            assert result.size == max_matching(g).size

    def test_deterministic(self, rng):
        g = random_graph(rng, 9, 0.5)
        assert max_matching(g) == max_matching(g)


class TestPerfectAndMissing:
    def test_single_edge(self):
        ok, w = perfect_matching_exists(Graph(2, [(0, 1)]))
        assert ok and w.size == 1

    def test_odd_path(self):
        assert perfect_matching_exists(path_graph(3))[0] is False

    def test_four_cycle(self):
        # brute force: the 4-cycle has exactly 2 perfect matchings
        g = cycle_graph(4)
        pm = [m for m in all_matchings(g) if m.size == 2]
        assert len(pm) == 2
        assert perfect_matching_exists(g)[0]

    def test_missing_one_on_path(self):
        m = matching_missing_exactly(path_graph(3), 1)
        assert m is not None and m.size == 1

    def test_missing_zero_on_odd_path(self):
        assert matching_missing_exactly(path_graph(3), 0) is None

    def test_six_cycle_missing_two(self):
        m = matching_missing_exactly(cycle_graph(6), 2)
        assert m is not None and m.size == 2

    def test_agrees_with_enumeration(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), 0.4)
            sizes = {m.size for m in all_matchings(g)}
            for k in range(g.n + 1):
                got = matching_missing_exactly(g, k)
                want = (g.n - k) >= 0 and (g.n - k) % 2 == 0 and (g.n - k) // 2 in sizes
                assert (got is not None) == want
                if got is not None:
                    assert 2 * got.size == g.n - k


class TestGallaiEdmonds:
    def test_triangle(self):
        ge = gallai_edmonds(cycle_graph(3))
        assert ge.cut_set == frozenset()
        assert ge.even_part == frozenset()
        assert ge.odd_components == (frozenset({0, 1, 2}),)

    def test_single_edge(self):
        ge = gallai_edmonds(Graph(2, [(0, 1)]))
        assert ge.cut_set == frozenset()
        assert ge.even_part == frozenset({0, 1})
        assert ge.odd_components == ()

    def test_star(self):
        # derived by enumerating the maximum matchings of the 3-leaf star:
        # every leaf is exposable, the center never is
        ge = gallai_edmonds(Graph(4, [(0, 1), (0, 2), (0, 3)]))
        assert ge.cut_set == frozenset({0})
        assert ge.even_part == frozenset()
        assert set(ge.odd_components) == {
            frozenset({1}),
            frozenset({2}),
            frozenset({3}),
        }

    def test_structure_properties(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.4, 0.7]))
            ge = gallai_edmonds(g)
            nu = max_matching(g).size
            parts = [ge.cut_set, ge.even_part, *ge.odd_components]
            assert sum(len(p) for p in parts) == g.n
            assert len(ge.odd_components) - len(ge.cut_set) == g.n - 2 * nu
            assert ge.witness.size == nu
            for comp in ge.odd_components:
                assert len(comp) % 2 == 1
                for v in comp:
                    sub, _ = induced_subgraph(g, comp - {v})
                    assert perfect_matching_exists(sub)[0]

    def test_deficient_part_is_exposable_set(self, rng):
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 7), 0.4)
            ge = gallai_edmonds(g)
            nu = max_matching(g).size
            exposable = set()
            for m in all_matchings(g):
                if m.size == nu:
                    exposable |= set(range(g.n)) - m.covered
            deficient = set().union(*ge.odd_components) if ge.odd_components else set()
            assert exposable == deficient


class TestAlternatingReach:
    def test_forced_path(self):
        f = alternating_reach(path_graph(3), Matching([(1, 2)]), 0)
        assert {0, 2} <= f.even_set
        assert f.path_to(2) == [0, 1, 2]

    def test_isolated_root(self):
        f = alternating_reach(Graph(3, [(1, 2)]), Matching([(1, 2)]), 0)
        assert f.even_set == frozenset({0})

    def test_blossom_five_cycle(self):
        # odd cycle with a near-perfect matching reaches every vertex
        f = alternating_reach(cycle_graph(5), Matching([(1, 2), (3, 4)]), 0)
        assert f.even_set == frozenset(range(5))

    def test_covered_root_rejected(self):
        with pytest.raises(InputError):
            alternating_reach(path_graph(3), Matching([(0, 1)]), 0)

    def test_matches_brute_force_with_valid_paths(self, rng):
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 8), rng.choice([0.25, 0.5]))
            if len(g.edges) > 12:
                continue
            m = random_matching(rng, g)
            partner = m.partner_map()
            for root in range(g.n):
                if root in m.covered:
                    continue
                f = alternating_reach(g, m, root)
                assert f.even_set == even_reach_brute(g, m, root)
                for t in f.even_set:
                    p = f.path_to(t)
                    assert p[0] == root and p[-1] == t
                    assert len(set(p)) == len(p) and len(p) % 2 == 1
                    for i in range(len(p) - 1):
                        assert g.has_edge(p[i], p[i + 1])
                        want_matched = i % 2 == 1
                        assert (partner.get(p[i]) == p[i + 1]) == want_matched


class TestCoverable:
    def test_path_opposite_ends(self):
        assert coverable(path_graph(3), [0, 2]) is None

    def test_path_one_end(self):
        w = coverable(path_graph(3), [0])
        assert w is not None and 0 in w.covered

    def test_all_subsets_match_brute_force(self, rng):
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 8), rng.choice([0.25, 0.5, 0.8]))
            covsets = coverable_sets_brute(g)
            for bits in range(1 << g.n):
                x = frozenset(i for i in range(g.n) if bits >> i & 1)
                want = any(x <= s for s in covsets)
                got = coverable(g, x)
                assert (got is not None) == want
                if got is not None:
                    assert x <= got.covered
                rank_want = max((len(x & s) for s in covsets), default=0)
                assert coverage_rank(g, x) == rank_want


class TestBipartition:
    def test_even_cycle(self):
        assert bipartition(cycle_graph(6)) is not None

    def test_odd_cycle(self):
        assert bipartition(cycle_graph(5)) is None
