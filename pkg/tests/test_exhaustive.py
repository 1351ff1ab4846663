import pytest

from ntumatch import Graph, Instance, ResourceLimitError, gen_example1
from ntumatch.exhaustive import (
    all_matchings,
    count_matchings,
    oracle_core,
    oracle_delta_path,
)
from ntumatch.couples import normalize

from conftest import cycle_graph, random_graph


class TestAllMatchings:
    def test_triangle(self):
        assert count_matchings(cycle_graph(3)) == 4

    def test_single_edge(self):
        assert count_matchings(Graph(2, [(0, 1)])) == 2

    def test_no_duplicates(self, rng):
        g = random_graph(rng, 7, 0.5)
        seen = list(all_matchings(g))
        assert len(seen) == len({m.edges for m in seen})

    def test_component_product(self):
        # disjoint-union count equals the product of per-component counts
        gen = gen_example1()
        assert count_matchings(gen.instance.graph) == 26**3 * 4**2

    def test_cap(self):
        g = Graph(20, [(2 * i, 2 * i + 1) for i in range(10)])
        with pytest.raises(ResourceLimitError):
            count_matchings(g, cap=100)


class TestOracleCore:
    def test_perfect_matching_instance(self):
        inst = Instance(
            Graph(4, [(0, 1), (2, 3)]),
            (frozenset({0, 1}), frozenset({2, 3})),
        )
        res = oracle_core(inst, "weak")
        assert (2, 2) in res.in_core
        assert not res.empty

    def test_example1_weak_core_empty(self):
        gen = gen_example1()
        assert oracle_core(gen.instance, "weak").empty

    def test_certificates_validate(self, rng):
        from ntumatch import BlockCertificate

        inst = Instance(
            Graph(4, [(0, 1), (1, 2), (2, 3)]),
            (frozenset({0, 1}), frozenset({2, 3})),
        )
        res = oracle_core(inst, "strong")
        for vec, (rep, coalition, witness) in res.blocked.items():
            cert = BlockCertificate(coalition, witness, "weak")
            cert.validate(inst, vec)


class TestOracleDelta:
    def test_explicit_instance(self):
        inst = Instance(
            Graph(6, [(0, 4), (1, 2), (3, 4)]),
            (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})),
        )
        cg = normalize(inst)
        assert oracle_delta_path(cg, 0, 1, 2)
        assert not oracle_delta_path(cg, 0, 2, 1)

    def test_edgeless(self):
        inst = Instance(
            Graph(6), tuple(frozenset({2 * i, 2 * i + 1}) for i in range(3))
        )
        cg = normalize(inst)
        assert not oracle_delta_path(cg, 0, 1, 2)
