"""Family generators: hand-enumerated adjacency oracles and shape contracts."""

import pytest

from copwidth import (
    GraphError,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_random_dag,
    gen_random_digraph,
    gen_switch_all,
    gen_zadeh,
    is_acyclic,
    lemma_bipartite_witness,
    parse_graph,
    serialize_graph,
    symmetric_closure,
)

# The full 14-vertex instance written out edge by edge.
SWITCH_ALL_1 = {
    "x": {"x"},
    "s": {"x", "f1"},
    "c": {"s", "r"},
    "r": {"x", "g1"},
    "t1": {"s", "r", "c"},
    "t2": {"s", "r", "t1"},
    "a1": {"t1"},
    "a2": {"t2"},
    "d1": {"s", "r", "e1", "a1", "a2"},
    "e1": {"d1", "h1"},
    "f1": {"e1"},
    "g1": {"f1", "k1"},
    "h1": {"k1"},
    "k1": {"x"},
}


class TestSwitchAll:
    def test_rejects_zero(self):
        with pytest.raises(GraphError):
            gen_switch_all(0)

    def test_vertex_counts(self):
        for n in range(1, 17):
            assert gen_switch_all(n).vertex_count == 10 * n + 4
        assert gen_switch_all(3).vertex_count == 34

    def test_canonical_vertex_order(self):
        g = gen_switch_all(2)
        want = [
            "x", "s", "c", "r",
            "t1", "t2", "t3", "t4", "a1", "a2", "a3", "a4",
            "d1", "e1", "f1", "g1", "h1", "k1",
            "d2", "e2", "f2", "g2", "h2", "k2",
        ]
        assert list(g.names) == want

    def test_full_adjacency_at_n1(self):
        g = gen_switch_all(1)
        got = {
            g.name_of(v): {g.name_of(w) for w in g.successors(v)}
            for v in range(g.vertex_count)
        }
        assert got == SWITCH_ALL_1
        assert g.edge_count == 27

    def test_d2_successors(self):
        g = gen_switch_all(2)
        d2 = g.id_of("d2")
        got = {g.name_of(w) for w in g.successors(d2)}
        assert got == {"s", "r", "e2", "a1", "a2", "a3", "a4"}

    def test_k_vertices_feed_later_g(self):
        g = gen_switch_all(3)
        k1 = g.id_of("k1")
        got = {g.name_of(w) for w in g.successors(k1)}
        assert got == {"x", "g2", "g3"}


class TestZadeh:
    def test_rejects_zero(self):
        with pytest.raises(GraphError):
            gen_zadeh(0)

    def test_vertex_counts(self):
        for n in range(1, 9):
            assert gen_zadeh(n).vertex_count == 13 * n + 3
        assert gen_zadeh(3).vertex_count == 42

    def test_edge_count_at_n1(self):
        assert gen_zadeh(1).edge_count == 33

    def test_k_clique_bidirectional_no_self_loops(self):
        g = gen_zadeh(4)
        ks = [g.id_of(f"k{i}") for i in range(1, 5)]
        for u in ks:
            assert not g.has_edge(u, u)
            for w in ks:
                if u != w:
                    assert g.has_edge(u, w) and g.has_edge(w, u)

    def test_h0_successors(self):
        g = gen_zadeh(3)
        h10 = g.id_of("h1^0")
        got = {g.name_of(w) for w in g.successors(h10)}
        assert got == {"t", "k3"}

    def test_h0_empty_tail_range(self):
        g = gen_zadeh(1)
        h10 = g.id_of("h1^0")
        assert {g.name_of(w) for w in g.successors(h10)} == {"t"}

    def test_t_self_loop(self):
        g = gen_zadeh(2)
        t = g.id_of("t")
        assert g.has_edge(t, t)


class TestBipartiteAndWitness:
    def test_k11(self):
        g = gen_complete_bipartite(1, 1)
        assert g.vertex_count == 2
        assert g.edge_count == 2

    def test_k22(self):
        g = gen_complete_bipartite(2, 2)
        assert g.vertex_count == 4
        assert g.edge_count == 8

    def test_k33_already_symmetric(self):
        g = gen_complete_bipartite(3, 3)
        assert symmetric_closure(g) == g

    def test_witness_small_values(self):
        n, a, b = lemma_bipartite_witness(2)
        assert n == 2
        g = gen_switch_all(2)
        assert {g.name_of(v) for v in a} == {"a1", "a2"}
        assert {g.name_of(v) for v in b} == {"d1", "d2"}

        n, a, b = lemma_bipartite_witness(3)
        assert n == 4
        assert len(a) == len(b) == 3

        n, a, b = lemma_bipartite_witness(1)
        assert n == 1
        g = gen_switch_all(1)
        assert {g.name_of(v) for v in a} == {"a1"}
        assert {g.name_of(v) for v in b} == {"d1"}

    @pytest.mark.parametrize("k", range(1, 9))
    def test_witness_adjacency_and_independence(self, k):
        n, a, b = lemma_bipartite_witness(k)
        h = symmetric_closure(gen_switch_all(n))
        for u in a:
            for w in b:
                assert h.has_edge(u, w) and h.has_edge(w, u)
        for side in (a, b):
            for u in side:
                for w in side:
                    assert not h.has_edge(u, w)


class TestSmallShapes:
    def test_cycle(self):
        g = gen_cycle(4)
        assert g.vertex_count == 4
        assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3), (3, 0)]

    def test_path(self):
        g = gen_path(3)
        assert sorted(g.edges()) == [(0, 1), (1, 2)]
        assert is_acyclic(g)


class TestRandom:
    def test_p_zero_edgeless(self):
        assert gen_random_digraph(6, 0.0, 1).edge_count == 0

    def test_p_one_complete(self):
        assert gen_random_digraph(3, 1.0, 1).edge_count == 6

    def test_deterministic(self):
        a = gen_random_digraph(8, 0.4, 123)
        b = gen_random_digraph(8, 0.4, 123)
        assert a == b
        assert a != gen_random_digraph(8, 0.4, 124)

    def test_no_self_loops(self):
        g = gen_random_digraph(7, 0.9, 5)
        assert all(u != w for u, w in g.edges())

    def test_dag_is_acyclic(self):
        for seed in range(10):
            assert is_acyclic(gen_random_dag(9, 0.5, seed))


class TestRoundTrips:
    @pytest.mark.parametrize(
        "g",
        [
            gen_switch_all(2),
            gen_zadeh(2),
            gen_complete_bipartite(2, 3),
            gen_cycle(5),
            gen_random_digraph(6, 0.5, 42),
        ],
        ids=["switch-all", "zadeh", "bipartite", "cycle", "random"],
    )
    def test_json_round_trip(self, g):
        assert parse_graph(serialize_graph(g)) == g
