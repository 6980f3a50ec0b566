from fractions import Fraction
from typing import List

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from debruijn_balance.config import Settings
from debruijn_balance.core.graph import DeBruijnGraph, Digraph, VertexWeights, build_debruijn

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Small numerators and denominators keep the exact arithmetic fast.
RATIONALS = st.builds(Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=6))

DESK_GRAPHS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]

# Every desk graph with horizons d, d + 1 and 2d + 3.
SWEEP = [pytest.param(n, d, T, id=f"B{n}{d}-T{T}") for n, d in DESK_GRAPHS for T in (d, d + 1, 2 * d + 3)]

# Horizons long enough to carry stationary weights.
BALANCED_SWEEP = [pytest.param(n, d, T, id=f"B{n}{d}-T{T}") for n, d in DESK_GRAPHS for T in (d + 1, 2 * d + 3)]

# B(2, 3) successor lists, written out by hand
B23_ADJACENCY = {
    0: [0, 1],
    1: [2, 3],
    2: [4, 5],
    3: [6, 7],
    4: [0, 1],
    5: [2, 3],
    6: [4, 5],
    7: [6, 7],
}


def vertex_weights(size: int) -> st.SearchStrategy:
    return st.lists(RATIONALS, min_size=size, max_size=size).map(VertexWeights.of)


@st.composite
def graph_and_weights(draw: st.DrawFn, graphs: List = DESK_GRAPHS):
    n, d = draw(st.sampled_from(graphs))
    g = build_debruijn(n, d)
    return g, draw(vertex_weights(g.N))


@pytest.fixture
def b21() -> DeBruijnGraph:
    return build_debruijn(2, 1)


@pytest.fixture
def b22() -> DeBruijnGraph:
    return build_debruijn(2, 2)


@pytest.fixture
def b23() -> DeBruijnGraph:
    return build_debruijn(2, 3)


@pytest.fixture
def spike() -> VertexWeights:
    """c = (0, 4, 0, 0) on B(2, 2); global mean 1."""
    return VertexWeights.of([0, 4, 0, 0])


@pytest.fixture
def spike_balanced():
    return {
        (0, 0): Fraction(1),
        (0, 1): Fraction(-1),
        (1, 2): Fraction(-1),
        (1, 3): Fraction(1),
        (2, 0): Fraction(1),
        (2, 1): Fraction(-1),
        (3, 2): Fraction(-1),
        (3, 3): Fraction(1),
    }


@pytest.fixture
def triangle() -> Digraph:
    return Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def lopsided() -> Digraph:
    """Out-degrees 2, 1, 1."""
    return Digraph.from_edges(3, [(0, 0), (0, 1), (1, 2), (2, 0)])


@pytest.fixture
def test_settings() -> Settings:
    return Settings()
