import pytest

from ntumatch import (
    Graph,
    InputError,
    Instance,
    X3CInstance,
    attach_special_edge,
    gen_3sat_weak_emptiness,
    gen_example1,
    gen_random,
    gen_x3c_strong,
    gen_x3c_weak,
    max_matching,
)
from ntumatch.graphs import bipartition
from ntumatch.serialize import instance_to_json

YES = X3CInstance(elements=3, sets=((1, 2, 3),))
NO = X3CInstance(elements=3, sets=())


class TestExample1:
    def test_counts(self):
        gen = gen_example1()
        assert gen.instance.graph.n == 21
        assert len(gen.instance.graph.edges) == 36  # 3*10 + 2*3
        assert [len(p) for p in gen.instance.players] == [7, 7, 7]

    def test_maximum_matching_size(self):
        gen = gen_example1()
        assert max_matching(gen.instance.graph).size == 8
        assert gen.matching.size == 8

    def test_name_map_round_trip(self):
        gen = gen_example1()
        assert len(gen.name_map) == 21
        assert gen.name_map["a1"] == 0 and gen.name_map["c7"] == 20


class TestSpecialEdge:
    def test_growth(self):
        host = Instance(Graph(2, []), (frozenset({0}), frozenset({1})))
        gen = attach_special_edge(host, 0, 1)
        assert gen.instance.graph.n == 2 + 27
        assert gen.instance.num_players == 2 + 5

    def test_endpoints_checked(self):
        host = Instance(Graph(2, []), (frozenset({0}), frozenset({1})))
        with pytest.raises(InputError):
            attach_special_edge(host, 0, 5)

    def test_wiring(self):
        host = Instance(Graph(2, []), (frozenset({0}), frozenset({1})))
        gen = attach_special_edge(host, 0, 1)
        nm = gen.name_map
        tag = "se2."
        es = gen.instance.graph.edge_set
        for a, b in (
            (nm[tag + "s2"], nm[tag + "a1"]),
            (nm[tag + "s1"], nm[tag + "t1"]),
            (nm[tag + "s4"], nm[tag + "t2"]),
            (0, nm[tag + "s1"]),
            (nm[tag + "s4"], 1),
            (nm[tag + "s2"], nm[tag + "s3"]),
        ):
            assert ((a, b) if a < b else (b, a)) in es


class TestX3CWeak:
    def test_vertex_count(self):
        gen = gen_x3c_weak(YES)
        n3 = 3
        assert gen.instance.graph.n == n3 + (6 * 1 - 2) + 5 * 1

    def test_bipartite_and_class_sizes(self):
        for x3c in (YES, NO, X3CInstance(6, ((1, 2, 3), (2, 4, 6), (4, 5, 6)))):
            gen = gen_x3c_weak(x3c)
            assert bipartition(gen.instance.graph) is not None
            assert max(len(p) for p in gen.instance.players) <= 3

    def test_challenged_matching_shape(self):
        gen = gen_x3c_weak(YES)
        # every selector pair and the whole connector chain are matched
        assert gen.matching.size == 2 * 1 + (3 * 1 - 1)

    def test_malformed_rejected(self):
        with pytest.raises(InputError):
            X3CInstance(elements=4, sets=())
        with pytest.raises(InputError):
            X3CInstance(elements=3, sets=((3, 2, 1),))


class TestX3CStrong:
    def test_exposes_exactly_last_element(self):
        gen = gen_x3c_strong(YES)
        exposed = set(range(gen.instance.graph.n)) - gen.matching.covered
        assert exposed == {gen.name_map["a3"]}

    def test_bipartite_and_class_sizes(self):
        for x3c in (YES, NO, X3CInstance(6, ((1, 2, 3), (2, 4, 6), (4, 5, 6)))):
            gen = gen_x3c_strong(x3c)
            assert bipartition(gen.instance.graph) is not None
            assert max(len(p) for p in gen.instance.players) <= 3


class TestSat:
    def test_single_clause_structure(self):
        gen = gen_3sat_weak_emptiness([(1, 1, 1)])
        assert max(len(p) for p in gen.instance.players) <= 7
        assert gen.name_map["_special_edges"] == 0

    def test_special_edge_count_is_product(self):
        gen = gen_3sat_weak_emptiness([(1, 1, -1), (-1, 1, 1)])
        # variable 1 appears 4 times positive, 2 times negative
        assert gen.name_map["_special_edges"] == 4 * 2

    def test_rejects_bad_clause(self):
        with pytest.raises(InputError):
            gen_3sat_weak_emptiness([(1, 2)])
        with pytest.raises(InputError):
            gen_3sat_weak_emptiness([(1, 0, 2)])


class TestRandom:
    def test_determinism(self):
        a = gen_random(12, 3, 0.4, seed=5)
        b = gen_random(12, 3, 0.4, seed=5)
        assert instance_to_json(a) == instance_to_json(b)

    def test_extreme_probabilities(self):
        assert gen_random(6, 2, 0.0, seed=1).graph.edges == ()
        assert len(gen_random(6, 2, 1.0, seed=1).graph.edges) == 15

    def test_class_cap(self):
        inst = gen_random(11, 3, 0.2, seed=2)
        assert max(len(p) for p in inst.players) <= 3
        assert sum(len(p) for p in inst.players) == 11

    def test_validation(self):
        with pytest.raises(InputError):
            gen_random(0, 2, 0.5, seed=0)
        with pytest.raises(InputError):
            gen_random(4, 0, 0.5, seed=0)
        with pytest.raises(InputError):
            gen_random(4, 2, 1.5, seed=0)
