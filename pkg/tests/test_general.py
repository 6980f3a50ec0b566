from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from debruijn_balance.core.general import (
    expected_step_cost,
    expected_step_costs,
    general_value,
    general_value_table,
    k_regular_value,
    k_regular_value_table,
    path_counts,
    simulate_walk_costs,
    transition_operator,
)
from debruijn_balance.core.graph import Digraph, VertexWeights, build_debruijn
from debruijn_balance.core.value import GameConfig, solve_dpp
from debruijn_balance.utils.exceptions import DomainError, RegularityError, SinkError
from tests.conftest import graph_and_weights, vertex_weights


@st.composite
def sink_free_digraphs(draw):
    size = draw(st.integers(min_value=1, max_value=6))
    adjacency = []
    for _ in range(size):
        successors = draw(st.sets(st.integers(min_value=0, max_value=size - 1), min_size=1))
        adjacency.append(tuple(sorted(successors)))
    return Digraph(size, tuple(adjacency))


class TestTransitionOperator:
    def test_rows_are_stochastic(self, lopsided):
        p = transition_operator(lopsided)
        assert [sum(row) for row in p] == [1, 1, 1]
        assert p[0, 0] == p[0, 1] == Fraction(1, 2)

    def test_sink_rejected(self):
        with pytest.raises(SinkError) as info:
            transition_operator(Digraph.from_edges(3, [(0, 1), (1, 2)]))
        assert info.value.vertex == 2


class TestGeneralValue:
    def test_triangle(self, triangle):
        c = VertexWeights.of([1, 2, 3])
        assert general_value(triangle, c, 2, 0, 0) == 6
        assert general_value_table(triangle, c, 2) == ((6, 6, 6), (3, 5, 4), (1, 2, 3))

    def test_irregular_graph(self, lopsided):
        c = VertexWeights.of([0, 3, 6])
        assert general_value_table(lopsided, c, 1)[0] == (Fraction(3, 2), 9, 6)
        assert expected_step_cost(lopsided, c, 1, 0) == Fraction(3, 2)
        assert expected_step_costs(lopsided, c, 0) == [0, 3, 6]

    @given(graph_and_weights([(2, 1), (2, 2), (2, 3), (3, 2)]), st.integers(min_value=0, max_value=7))
    def test_equals_the_debruijn_value(self, gc, T):
        g, c = gc
        vt = solve_dpp(GameConfig(g, c, T))
        table = general_value_table(g.to_digraph(), c, T)
        assert table == vt.values
        assert general_value(g.to_digraph(), c, T, 0, 0) == vt.value(0, 0)

    @given(sink_free_digraphs(), st.data())
    def test_recursion_matches_expectations(self, g, data):
        c = data.draw(vertex_weights(g.vertex_count))
        T = data.draw(st.integers(min_value=0, max_value=5))
        table = general_value_table(g, c, T)
        for t in range(T + 1):
            for m in g.vertices:
                assert general_value(g, c, T, t, m) == table[t][m]

    def test_bad_turn(self, triangle):
        with pytest.raises(DomainError):
            general_value(triangle, VertexWeights.of([1, 2, 3]), 2, 3, 0)


class TestRegularGraphs:
    def test_path_counts(self, b22):
        counts = path_counts(b22, 2)
        # In B(2, 2) there is exactly one walk of length d between any two vertices.
        assert all(counts.count(j, m) == 1 for j in b22.vertices for m in b22.vertices)
        assert counts.row_total(0) == 4

    def test_large_counts_do_not_overflow(self):
        counts = path_counts(build_debruijn(2, 1), 70)
        assert counts.count(0, 0) == 2**69

    @given(graph_and_weights([(2, 2), (3, 1), (3, 2)]), st.integers(min_value=0, max_value=6))
    def test_walk_count_formula(self, gc, T):
        g, c = gc
        table = general_value_table(g, c, T)
        assert k_regular_value_table(g, c, T) == table
        assert k_regular_value(g, c, T, 0, 1) == table[0][1]

    def test_triangle_is_one_regular(self, triangle):
        c = VertexWeights.of([1, 2, 3])
        assert k_regular_value(triangle, c, 2, 0, 0) == 6

    def test_irregular_rejected(self, lopsided):
        with pytest.raises(RegularityError):
            k_regular_value(lopsided, VertexWeights.of([0, 3, 6]), 2, 0, 0)


class TestSimulation:
    def test_monte_carlo_within_four_sigma(self, b22, spike):
        exact = general_value(b22, spike, 6, 0, 0)
        assert exact == 7
        mean, stderr = simulate_walk_costs(b22, spike, 6, 0, 0, 100_000, seed=2024)
        assert stderr > 0
        assert abs(mean - float(exact)) <= 4 * stderr

    def test_deterministic_walk(self, triangle):
        mean, stderr = simulate_walk_costs(triangle, VertexWeights.of([1, 2, 3]), 2, 0, 0, 10)
        assert mean == 6.0 and stderr == 0.0

    def test_seeded(self, lopsided):
        c = VertexWeights.of([0, 3, 6])
        first = simulate_walk_costs(lopsided, c, 4, 0, 0, 500, seed=7)
        assert first == simulate_walk_costs(lopsided, c, 4, 0, 0, 500, seed=7)
        assert np.isfinite(first[1])
