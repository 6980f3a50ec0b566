from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from debruijn_balance.core.graph import VertexWeights, build_debruijn
from debruijn_balance.core.value import (
    MAXMIN,
    MIXED,
    CarolStrategy,
    GameConfig,
    TurnSet,
    collapsed_sum,
    equalizing_weights,
    expected_cost_under_strategy,
    explicit_sum,
    grid_maximin,
    grid_minimax,
    layer_average,
    optimal_edge_weights,
    play_out,
    solve_dpp,
    solve_maxmin,
    solve_mixed,
    value_closed_form,
    value_slice,
)
from debruijn_balance.utils.exceptions import DomainError
from tests.conftest import RATIONALS, SWEEP, graph_and_weights, vertex_weights


class TestBackwardInduction:
    def test_two_vertex_example(self, b21):
        cfg = GameConfig(b21, VertexWeights.of([1, 3]), 5)
        vt = solve_dpp(cfg)
        for t in range(6):
            assert vt.value(t, 0) == 1 + 2 * (5 - t)
            assert vt.value(t, 1) == 3 + 2 * (5 - t)
        assert vt.value(0, 0) == 11

    def test_spike_values(self, b22, spike):
        vt = solve_dpp(GameConfig(b22, spike, 6))
        for t in range(6):
            h = 6 - t
            assert vt.slice(t) == tuple(Fraction(x + h - 1) for x in (2, 4, 2, 0))
        assert vt.slice(6) == (0, 4, 0, 0)

    def test_zero_horizon_is_the_weights(self, b22, spike):
        vt = solve_dpp(GameConfig(b22, spike, 0))
        assert vt.slice(0) == tuple(spike)
        assert vt.weights == ()

    def test_negative_horizon(self, b22, spike):
        with pytest.raises(DomainError):
            GameConfig(b22, spike, -1)

    @given(graph_and_weights(), st.integers(min_value=0, max_value=4))
    def test_constant_shift(self, gc, extra):
        g, c = gc
        T = g.d + extra
        base = solve_dpp(GameConfig(g, c, T))
        shifted = solve_dpp(GameConfig(g, c.shifted(3), T))
        for t in range(T + 1):
            for m in g.vertices:
                assert shifted.value(t, m) == base.value(t, m) + 3 * (T - t + 1)

    @given(graph_and_weights(), st.integers(min_value=1, max_value=6))
    def test_mean_recursion_and_sum_zero(self, gc, T):
        g, c = gc
        cfg = GameConfig(g, c, T)
        vt = solve_dpp(cfg)
        for t in range(T):
            following = vt.slice(t + 1)
            for m in g.vertices:
                successors = g.successors(m)
                mean = sum((following[s] for s in successors), Fraction(0)) / g.n
                assert vt.value(t, m) == c[m] + mean
                assert sum(optimal_edge_weights(cfg, vt, t, m)) == 0
                assert list(vt.weights[t][m]) == optimal_edge_weights(cfg, vt, t, m)

    def test_game_cost(self, b21):
        vt = solve_dpp(GameConfig(b21, VertexWeights.of([1, 3]), 5))
        assert vt.game_cost(2, 1) == vt.value(3, 1) == 7

    @given(graph_and_weights(), st.integers(min_value=0, max_value=6), st.data())
    def test_rolling_slice(self, gc, T, data):
        g, c = gc
        cfg = GameConfig(g, c, T)
        t = data.draw(st.integers(min_value=0, max_value=T))
        assert value_slice(cfg, t) == solve_dpp(cfg).slice(t)


class TestClosedForm:
    def test_layer_averages(self, b22, spike):
        assert [layer_average(b22, spike, m, 1) for m in b22.vertices] == [2, 0, 2, 0]
        assert layer_average(b22, spike, 1, 2) == 1
        assert layer_average(b22, spike, 1, 5) == 1

    @pytest.mark.parametrize("n, d, T", SWEEP)
    @settings(max_examples=100)
    @given(data=st.data())
    def test_matches_backward_induction(self, n, d, T, data):
        g = build_debruijn(n, d)
        c = data.draw(vertex_weights(g.N))
        cfg = GameConfig(g, c, T)
        vt = solve_dpp(cfg)
        for t in range(T + 1):
            for m in g.vertices:
                assert value_closed_form(cfg, t, m) == vt.value(t, m)

    @given(graph_and_weights())
    def test_collapsed_at_its_boundary(self, gc):
        g, c = gc
        cfg = GameConfig(g, c, 2 * g.d)
        for t in range(g.d, 2 * g.d + 1):
            if cfg.T - t >= g.d - 1:
                for m in g.vertices:
                    assert collapsed_sum(cfg, t, m) == explicit_sum(cfg, t, m)

    def test_collapsed_too_short(self, b23):
        cfg = GameConfig(b23, VertexWeights.constant(8, 1), 3)
        with pytest.raises(DomainError):
            collapsed_sum(cfg, 3, 0)

    def test_rejects_bad_turn(self, b22, spike):
        cfg = GameConfig(b22, spike, 3)
        with pytest.raises(DomainError):
            value_closed_form(cfg, 4, 0)
        with pytest.raises(DomainError):
            value_closed_form(cfg, 0, 4)


class TestVariants:
    @pytest.mark.parametrize("n, d", [(2, 2), (3, 2)])
    @settings(max_examples=100)
    @given(data=st.data())
    def test_mixed_and_swapped_games(self, n, d, data):
        g = build_debruijn(n, d)
        c = data.draw(vertex_weights(g.N))
        turns = data.draw(st.sets(st.integers(min_value=0, max_value=5)))
        cfg = GameConfig(g, c, 6)
        baseline = solve_dpp(cfg)
        mixed = solve_mixed(cfg, TurnSet.of(turns, 6))
        swapped = solve_maxmin(cfg)
        assert mixed.variant == MIXED
        assert swapped.variant == MAXMIN
        assert mixed.first_difference(baseline) is None
        assert swapped.values == baseline.values

    def test_turn_set_range(self):
        with pytest.raises(DomainError):
            TurnSet.of([0, 6], 6)

    def test_turn_set_horizon_must_match(self, b22, spike):
        with pytest.raises(DomainError):
            solve_mixed(GameConfig(b22, spike, 4), TurnSet.of([0], 6))


class TestStrategies:
    @given(st.sampled_from([(2, 2), (3, 1), (3, 2)]), st.data())
    def test_randomizing_carol_pays_the_value(self, nd, data):
        g = build_debruijn(*nd)
        c = data.draw(vertex_weights(g.N))
        raw = data.draw(st.lists(st.integers(min_value=0, max_value=9), min_size=g.n, max_size=g.n))
        if sum(raw) == 0:
            raw[0] = 1
        alpha = tuple(Fraction(x, sum(raw)) for x in raw)
        cfg = GameConfig(g, c, 4)
        vt = solve_dpp(cfg)
        strategy = CarolStrategy(default=alpha)
        t = data.draw(st.integers(min_value=0, max_value=3))
        m = data.draw(st.integers(min_value=0, max_value=g.N - 1))
        assert expected_cost_under_strategy(cfg, vt, strategy, t, m) == vt.value(t, m)

    def test_point_mass_and_uniform(self, b22, spike):
        cfg = GameConfig(b22, spike, 3)
        vt = solve_dpp(cfg)
        for strategy in (CarolStrategy.uniform(2), CarolStrategy.point_mass(2, 1)):
            assert expected_cost_under_strategy(cfg, vt, strategy, 0, 1) == vt.value(0, 1)

    def test_invalid_probability_vector(self, b22, spike):
        cfg = GameConfig(b22, spike, 3)
        vt = solve_dpp(cfg)
        bad = CarolStrategy(default=(Fraction(1, 2), Fraction(1, 3)))
        with pytest.raises(DomainError):
            expected_cost_under_strategy(cfg, vt, bad, 0, 0)

    @given(graph_and_weights([(2, 2), (3, 2)]), st.data())
    def test_every_carol_path_costs_the_value(self, gc, data):
        g, c = gc
        cfg = GameConfig(g, c, 5)
        vt = solve_dpp(cfg)
        start = data.draw(st.integers(min_value=0, max_value=g.N - 1))
        choices = data.draw(st.lists(st.integers(min_value=0, max_value=g.n - 1), min_size=5, max_size=5))
        assert play_out(cfg, vt, start, choices).cost == vt.value(0, start)
        assert play_out(cfg, vt, start).cost == vt.value(0, start)


class TestEqualizingWeights:
    @given(st.lists(RATIONALS, min_size=2, max_size=5))
    def test_equalizes_and_sums_to_zero(self, next_values):
        f = equalizing_weights(next_values)
        assert sum(f) == 0
        assert len({f_l + v for f_l, v in zip(f, next_values)}) == 1

    @given(RATIONALS, RATIONALS)
    def test_grid_search_finds_the_equalizer(self, a, b):
        grid = [Fraction(k, 12) for k in range(-600, 601)]
        best, x = grid_minimax([a, b], grid)
        f = equalizing_weights([a, b])
        assert best >= (a + b) / 2
        if f[0] in grid:
            assert best == (a + b) / 2
            assert x == f[0]

    @given(RATIONALS, RATIONALS)
    def test_grid_search_for_the_swapped_game(self, a, b):
        grid = [Fraction(k, 12) for k in range(-600, 601)]
        best, x = grid_maximin([a, b], grid)
        f = equalizing_weights([a, b])
        assert best <= (a + b) / 2
        if f[0] in grid:
            assert best == (a + b) / 2
            assert x == f[0]

    def test_swapped_values_match_a_brute_force_search(self, b22, spike):
        # Spike values are integers, so every equalizer is a multiple of 1/2.
        grid = [Fraction(k, 4) for k in range(-160, 161)]
        cfg = GameConfig(b22, spike, 4)
        swapped = solve_maxmin(cfg)
        for t in range(cfg.T):
            following = swapped.slice(t + 1)
            for m in b22.vertices:
                next_values = [following[s] for s in b22.successors(m)]
                best, _ = grid_maximin(next_values, grid)
                assert swapped.value(t, m) == spike[m] + best == spike[m] + sum(next_values) / 2

    def test_grid_needs_two_successors(self):
        with pytest.raises(DomainError):
            grid_maximin([Fraction(1)], [Fraction(0)])
        with pytest.raises(DomainError):
            grid_maximin([Fraction(1), Fraction(2)], [])
