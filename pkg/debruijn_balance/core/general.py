"""
The game on an arbitrary sink-free digraph.

With Paul equalizing, Carol's choice does not matter, so the token may as well move to a uniformly
random successor. The value is the expected cost of that random walk:

    u(t, v_m) = sum_{k=0}^{T-t} E[C_{k,m}],   C_{k,m} = cost of the vertex reached after k steps from v_m.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .graph import AnyGraph, Digraph, VertexWeights, as_digraph
from ..utils.exceptions import DomainError, RegularityError

logger = logging.getLogger(__name__)


def _sink_free(g: AnyGraph) -> Digraph:
    return as_digraph(g).require_sink_free()


def transition_operator(g: AnyGraph) -> np.ndarray:
    """Row-stochastic matrix of the uniform successor walk, exact Fraction entries."""
    dg = _sink_free(g)
    size = dg.vertex_count
    p = np.array([[Fraction(0)] * size for _ in range(size)], dtype=object)
    for v in dg.vertices:
        share = Fraction(1, dg.out_degree(v))
        for w in dg.successors(v):
            p[v, w] = share
    return p


def _weights_vector(dg: Digraph, c: VertexWeights) -> np.ndarray:
    c.check_for(dg)
    return np.array(list(c), dtype=object)


def expected_step_costs(g: AnyGraph, c: VertexWeights, k: int) -> List[Fraction]:
    """E[C_{k,m}] for every m, i.e. P^k c."""
    if k < 0:
        raise DomainError(f"step count must be non-negative, got {k}")
    p = transition_operator(g)
    vector = _weights_vector(as_digraph(g), c)
    for _ in range(k):
        vector = p.dot(vector)
    return [Fraction(x) for x in vector]


def expected_step_cost(g: AnyGraph, c: VertexWeights, k: int, m: int) -> Fraction:
    dg = as_digraph(g)
    dg.check_vertex(m)
    return expected_step_costs(dg, c, k)[m]


def _check_turns(T: int, t: int) -> None:
    if T < 0 or not 0 <= t <= T:
        raise DomainError(f"need 0 <= t <= T, got t={t}, T={T}")


def general_value(g: AnyGraph, c: VertexWeights, T: int, t: int, m: int) -> Fraction:
    """u(t, v_m) as the sum of expected step costs."""
    _check_turns(T, t)
    dg = as_digraph(g)
    dg.check_vertex(m)
    p = transition_operator(dg)
    vector = _weights_vector(dg, c)
    total = Fraction(vector[m])
    for _ in range(T - t):
        vector = p.dot(vector)
        total += vector[m]
    return total


def general_value_table(g: AnyGraph, c: VertexWeights, T: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """u(t, .) for t = 0..T by u(t-1, v) = c(v) + mean of u(t, .) over the successors of v."""
    if T < 0:
        raise DomainError(f"horizon T must be non-negative, got {T}")
    dg = _sink_free(g)
    c.check_for(dg)
    slices: List[Tuple[Fraction, ...]] = [tuple(c)]
    for _ in range(T):
        following = slices[-1]
        slices.append(
            tuple(
                c[v] + sum((following[w] for w in dg.successors(v)), Fraction(0)) / dg.out_degree(v)
                for v in dg.vertices
            )
        )
    slices.reverse()
    logger.debug("general value table over %d turns on %d vertices", T, dg.vertex_count)
    return tuple(slices)


@dataclass(frozen=True)
class PathCountTable:
    """counts[m, j] = number of walks of exactly ``steps`` edges from v_m to v_j."""

    steps: int
    counts: np.ndarray

    def count(self, j: int, m: int) -> int:
        return int(self.counts[m, j])

    def row_total(self, m: int) -> int:
        return int(sum(self.counts[m]))


def adjacency_matrix(g: AnyGraph) -> np.ndarray:
    dg = as_digraph(g)
    a = np.zeros((dg.vertex_count, dg.vertex_count), dtype=object)
    for u, w in dg.edges():
        a[u, w] = 1
    return a


def path_counts(g: AnyGraph, k: int) -> PathCountTable:
    if k < 0:
        raise DomainError(f"step count must be non-negative, got {k}")
    a = adjacency_matrix(g)
    # Python ints inside an object array, so counts never overflow.
    counts = np.identity(a.shape[0], dtype=int).astype(object)
    for _ in range(k):
        counts = a.dot(counts)
    return PathCountTable(k, counts)


def k_regular_value(g: AnyGraph, c: VertexWeights, T: int, t: int, m: int) -> Fraction:
    """u(t, v_m) through walk counts on an out-k-regular graph."""
    _check_turns(T, t)
    dg = _sink_free(g)
    degree = dg.out_regularity()
    if degree is None:
        raise RegularityError("out-degrees differ; the graph is not out-regular")
    dg.check_vertex(m)
    c.check_for(dg)
    a = adjacency_matrix(dg)
    counts = np.identity(dg.vertex_count, dtype=int).astype(object)
    total = Fraction(0)
    for steps in range(T - t + 1):
        if steps:
            counts = a.dot(counts)
        reached = sum((c[j] * int(counts[m, j]) for j in dg.vertices), Fraction(0))
        total += reached / Fraction(degree) ** steps
    return total


def k_regular_value_table(g: AnyGraph, c: VertexWeights, T: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Every u(t, .) from the walk-count formula, sharing the powers of the adjacency matrix."""
    if T < 0:
        raise DomainError(f"horizon T must be non-negative, got {T}")
    dg = _sink_free(g)
    degree = dg.out_regularity()
    if degree is None:
        raise RegularityError("out-degrees differ; the graph is not out-regular")
    a = adjacency_matrix(dg)
    # reached[k][m] = sum_j z(j, m, k) c(j) / degree^k
    reached = [_weights_vector(dg, c)]
    for _ in range(T):
        reached.append(a.dot(reached[-1]) / degree)
    return tuple(
        tuple(sum((Fraction(reached[k][m]) for k in range(T - t + 1)), Fraction(0)) for m in dg.vertices)
        for t in range(T + 1)
    )


def simulate_walk_costs(
    g: AnyGraph, c: VertexWeights, T: int, t: int, m: int, episodes: int, seed: int = 0
) -> Tuple[float, float]:
    """Monte Carlo estimate of u(t, v_m): (sample mean, standard error of the mean)."""
    _check_turns(T, t)
    if episodes < 2:
        raise DomainError("need at least two episodes")
    dg = _sink_free(g)
    c.check_for(dg)
    rng = np.random.default_rng(seed)
    degrees = np.array([dg.out_degree(v) for v in dg.vertices])
    padded = np.zeros((dg.vertex_count, int(degrees.max())), dtype=int)
    for v in dg.vertices:
        padded[v, : degrees[v]] = dg.successors(v)
    cost = np.array([float(x) for x in c])

    position = np.full(episodes, m, dtype=int)
    totals = cost[position].copy()
    for _ in range(T - t):
        picks = rng.integers(0, degrees[position])
        position = padded[position, picks]
        totals += cost[position]
    return float(totals.mean()), float(totals.std(ddof=1) / np.sqrt(episodes))
