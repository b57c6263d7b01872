"""Game solvers: frozen small-instance oracles, witnesses, and consistency."""

import pytest

from copwidth import (
    BudgetExceededError,
    GameConfig,
    Graph,
    GraphError,
    SweepCertificate,
    Variant,
    Winner,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_random_digraph,
    gen_switch_all,
    measure,
    measure_detailed,
    replay_cop_strategy,
    solve_entanglement,
    solve_invisible,
    solve_visible,
    verify_sweep,
)


def two_cycle():
    return Graph(["a", "b"], [(0, 1), (1, 0)])


class TestVisible:
    def test_tw_k22(self):
        g = gen_complete_bipartite(2, 2)
        assert solve_visible(g, GameConfig(Variant.TW, 3)).winner is Winner.COPS
        assert solve_visible(g, GameConfig(Variant.TW, 2)).winner is Winner.ROBBER

    def test_dagw_single_vertex(self):
        g = Graph(["a"], [])
        assert solve_visible(g, GameConfig(Variant.DAGW, 1)).winner is Winner.COPS

    def test_dagw_three_cycle(self):
        g = gen_cycle(3)
        assert solve_visible(g, GameConfig(Variant.DAGW, 1)).winner is Winner.ROBBER
        assert solve_visible(g, GameConfig(Variant.DAGW, 2)).winner is Winner.COPS

    def test_tw_plays_on_symmetrization(self):
        # one directed edge behaves like an undirected one under TW
        g = Graph(["a", "b"], [(0, 1)])
        assert solve_visible(g, GameConfig(Variant.TW, 2)).winner is Winner.COPS
        # but under DAGW one cop already corners the robber
        assert solve_visible(g, GameConfig(Variant.DAGW, 1)).winner is Winner.COPS

    def test_variant_guard(self):
        with pytest.raises(GraphError):
            solve_visible(two_cycle(), GameConfig(Variant.KW, 1))

    def test_empty_graph_cops_win(self):
        g = Graph([], [])
        assert solve_visible(g, GameConfig(Variant.TW, 0)).winner is Winner.COPS

    def test_cop_budget_guard(self):
        with pytest.raises(GraphError):
            solve_visible(two_cycle(), GameConfig(Variant.TW, 3))

    def test_witness_replays(self):
        for variant in (Variant.TW, Variant.DAGW):
            for g in (gen_cycle(4), gen_complete_bipartite(2, 2), gen_switch_all(1)):
                k = 0
                while True:
                    out = solve_visible(g, GameConfig(variant, k))
                    if out.winner is Winner.COPS:
                        break
                    k += 1
                assert replay_cop_strategy(g, variant, k, out.witness.moves)

    def test_full_moves_same_winner_spot_check(self):
        g = gen_random_digraph(4, 0.5, 99)
        for variant in (Variant.TW, Variant.DAGW):
            for k in range(5):
                cfg = GameConfig(variant, k)
                assert (
                    solve_visible(g, cfg).winner
                    is solve_visible(g, cfg, full_moves=True).winner
                )


class TestInvisible:
    def test_kw_self_loop_one_cop(self):
        g = Graph(["v"], [(0, 0)])
        out = solve_invisible(g, GameConfig(Variant.KW, 1))
        assert out.winner is Winner.COPS

    def test_kw_two_cycle(self):
        g = two_cycle()
        assert solve_invisible(g, GameConfig(Variant.KW, 1)).winner is Winner.ROBBER
        assert solve_invisible(g, GameConfig(Variant.KW, 2)).winner is Winner.COPS

    def test_dpw_dag_one_cop(self):
        g = gen_path(5)
        out = solve_invisible(g, GameConfig(Variant.DPW, 1))
        assert out.winner is Winner.COPS

    def test_monotone_flag_can_matter_for_pruning(self):
        g = two_cycle()
        relaxed = solve_invisible(g, GameConfig(Variant.KW, 2, require_monotone=False))
        assert relaxed.winner is Winner.COPS

    def test_witness_replays_as_certificate(self):
        for variant in (Variant.KW, Variant.DPW):
            for g in (gen_cycle(4), gen_switch_all(1), two_cycle()):
                k = 0
                while True:
                    out = solve_invisible(g, GameConfig(variant, k))
                    if out.winner is Winner.COPS:
                        break
                    k += 1
                cert = SweepCertificate(k, tuple(out.witness))
                rep = verify_sweep(g, cert, variant)
                assert rep.cleared and rep.monotone

    def test_variant_guard(self):
        with pytest.raises(GraphError):
            solve_invisible(two_cycle(), GameConfig(Variant.TW, 1))


class TestEntanglement:
    def test_acyclic_zero_cops(self):
        assert solve_entanglement(gen_path(4), 0).winner is Winner.COPS

    def test_single_vertex_no_edges_zero_cops(self):
        assert solve_entanglement(Graph(["a"], []), 0).winner is Winner.COPS

    def test_cycle_one_cop(self):
        assert solve_entanglement(gen_cycle(4), 1).winner is Winner.COPS

    def test_cycle_zero_cops_robber_loops(self):
        assert solve_entanglement(gen_cycle(4), 0).winner is Winner.ROBBER

    def test_self_loop_needs_one_cop(self):
        g = Graph(["a"], [(0, 0)])
        assert solve_entanglement(g, 0).winner is Winner.ROBBER
        assert solve_entanglement(g, 1).winner is Winner.COPS

    def test_switch_all_three_cops(self):
        out = solve_entanglement(gen_switch_all(1), 3)
        assert out.winner is Winner.COPS


class TestMeasure:
    def test_tw_of_bipartite_cliques(self):
        assert measure(gen_complete_bipartite(3, 3), Variant.TW) == 3
        assert measure(gen_complete_bipartite(2, 2), Variant.TW) == 2

    def test_ent_of_isolated_vertex(self):
        assert measure(Graph(["a"], []), Variant.ENT) == 0

    def test_kw_of_two_cycle(self):
        assert measure(two_cycle(), Variant.KW) == 2

    def test_empty_graph_is_zero_everywhere(self):
        g = Graph([], [])
        for variant in Variant:
            assert measure(g, variant) == 0

    def test_offsets_on_a_path(self):
        g = gen_path(4)
        assert measure(g, Variant.TW) == 1  # two cops, reported minus one
        assert measure(g, Variant.DPW) == 0
        assert measure(g, Variant.DAGW) == 1
        assert measure(g, Variant.KW) == 1
        assert measure(g, Variant.ENT) == 0

    def test_switch_all_small_instance_values(self):
        g = gen_switch_all(1)
        assert measure(g, Variant.DPW) == 1
        assert measure(g, Variant.DAGW) == 2
        assert measure(g, Variant.KW) == 2
        assert measure(g, Variant.TW) == 4
        assert measure(g, Variant.ENT) == 1

    def test_detailed_counts_states(self):
        value, states = measure_detailed(gen_cycle(3), Variant.DAGW)
        assert value == 2
        assert states > 0


class TestBudget:
    def test_exhaustion_raises(self):
        g = gen_switch_all(2)
        with pytest.raises(BudgetExceededError) as info:
            solve_visible(g, GameConfig(Variant.DAGW, 4), budget=10)
        assert info.value.budget == 10

    def test_exhaustion_from_measure(self):
        with pytest.raises(BudgetExceededError):
            measure(gen_switch_all(2), Variant.DAGW, budget=10)


class TestDeterminacyConsistency:
    @pytest.mark.parametrize("seed", range(12))
    def test_cops_win_is_monotone_in_budget(self, seed):
        g = gen_random_digraph(1 + seed % 5, 0.4, 1000 + seed)
        n = g.vertex_count
        for variant in Variant:
            prev = False
            for k in range(n + 1):
                if variant is Variant.ENT:
                    won = solve_entanglement(g, k).winner is Winner.COPS
                elif variant in (Variant.KW, Variant.DPW):
                    won = (
                        solve_invisible(g, GameConfig(variant, k)).winner
                        is Winner.COPS
                    )
                else:
                    won = (
                        solve_visible(g, GameConfig(variant, k)).winner
                        is Winner.COPS
                    )
                assert not (prev and not won), f"{variant} lost at k={k} after winning"
                prev = won
