"""
Verification oracles for cycle means: exhaustive simple-cycle enumeration and Karp's
minimum mean cycle dynamic program, both on exact rationals.
"""

import logging
import random
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence

import networkx as nx

from .graph import (
    AnyGraph,
    Cycle,
    Edge,
    EdgeWeights,
    VertexWeights,
    as_digraph,
    canonical_cycle,
    closed_walk_mean,
    cycle_edges,
)
from .models import CycleReport
from ..utils.constants import DEFAULT_CYCLE_CAP
from ..utils.exceptions import AssertionFailure, CapacityError, StructureError

logger = logging.getLogger(__name__)


def list_simple_cycles(g: AnyGraph, cap: int = DEFAULT_CYCLE_CAP) -> List[Cycle]:
    """Every simple cycle once, rotated to start at its smallest vertex, in lexicographic order."""
    found = sorted(stream_simple_cycles(g, cap))
    logger.debug("enumerated %d simple cycles", len(found))
    return found


def enumerate_simple_cycles(g: AnyGraph, cap: int = DEFAULT_CYCLE_CAP) -> Iterator[Cycle]:
    """Iterate the cycles of :func:`list_simple_cycles`.

    Lexicographic order needs the whole set first, so this holds up to ``cap`` cycles in memory
    before yielding; use :func:`stream_simple_cycles` when order does not matter.
    """
    yield from list_simple_cycles(g, cap)


def stream_simple_cycles(g: AnyGraph, cap: int = DEFAULT_CYCLE_CAP) -> Iterator[Cycle]:
    """Canonically rotated simple cycles as networkx finds them, in no particular order."""
    for count, cyc in enumerate(nx.simple_cycles(as_digraph(g).to_networkx())):
        if count >= cap:
            raise CapacityError(f"more than {cap} simple cycles")
        yield canonical_cycle(cyc)


def edge_cost_projection(g: AnyGraph, c: VertexWeights, f: EdgeWeights) -> Dict[Edge, Fraction]:
    """cost(u->w) = c(u) + f(u->w); summing over a cycle gives its doubly weighted weight."""
    costs = {}
    for u, w in as_digraph(g).edges():
        try:
            costs[(u, w)] = c[u] + Fraction(f[(u, w)])
        except KeyError:
            raise StructureError(f"no edge weight for {u}->{w}")
    return costs


def mean_edge_cost(cyc: Sequence[int], edge_costs: Mapping[Edge, Fraction]) -> Fraction:
    edges = cycle_edges(cyc)
    return sum((Fraction(edge_costs[e]) for e in edges), Fraction(0)) / len(edges)


def min_mean_cycle(g: AnyGraph, edge_costs: Mapping[Edge, Fraction]) -> Fraction:
    """Karp's minimum cycle mean.

    D[k][v] is the cheapest walk of exactly k edges ending at v, starting anywhere; the answer is
    min over v of max over k < N of (D[N][v] - D[k][v]) / (N - k).
    """
    dg = as_digraph(g)
    size = dg.vertex_count
    incoming: List[List] = [[] for _ in range(size)]
    for u, w in dg.edges():
        if (u, w) not in edge_costs:
            raise StructureError(f"no edge cost for {u}->{w}")
        incoming[w].append((u, Fraction(edge_costs[(u, w)])))

    table: List[List[Optional[Fraction]]] = [[Fraction(0)] * size]
    for _ in range(size):
        previous = table[-1]
        row: List[Optional[Fraction]] = []
        for v in range(size):
            candidates = [previous[u] + cost for u, cost in incoming[v] if previous[u] is not None]
            row.append(min(candidates) if candidates else None)
        table.append(row)

    best: Optional[Fraction] = None
    for v in range(size):
        last = table[size][v]
        if last is None:
            continue
        worst = max((last - table[k][v]) / (size - k) for k in range(size) if table[k][v] is not None)
        if best is None or worst < best:
            best = worst
    if best is None:
        raise StructureError("graph has no directed cycle")
    return best


def max_mean_cycle(g: AnyGraph, edge_costs: Mapping[Edge, Fraction]) -> Fraction:
    return -min_mean_cycle(g, {e: -Fraction(cost) for e, cost in edge_costs.items()})


def verify_equal_means(
    g: AnyGraph,
    c: VertexWeights,
    f: EdgeWeights,
    cap: int = DEFAULT_CYCLE_CAP,
    target: Optional[Fraction] = None,
) -> CycleReport:
    """Check that every cycle mean equals ``target`` (default: the mean vertex weight)."""
    c.check_for(g)
    costs = edge_cost_projection(g, c, f)
    target = c.mean() if target is None else Fraction(target)
    lowest = min_mean_cycle(g, costs)
    highest = max_mean_cycle(g, costs)
    try:
        cycles = list_simple_cycles(g, cap)
    except CapacityError as e:
        logger.warning("cycle enumeration skipped: %s; relying on the min/max oracle", e)
        return CycleReport(
            target_mean=target,
            min_mean=lowest,
            max_mean=highest,
            enumeration_complete=False,
            notes=(str(e),),
        )

    means = tuple(mean_edge_cost(cyc, costs) for cyc in cycles)
    witness = next(((cyc, mean) for cyc, mean in zip(cycles, means) if mean != target), None)
    if means and (min(means) != lowest or max(means) != highest):
        raise AssertionFailure("mean-cycle oracle disagrees with the enumerated cycles")
    return CycleReport(
        target_mean=target,
        min_mean=lowest,
        max_mean=highest,
        enumeration_complete=True,
        cycle_count=len(cycles),
        means=means,
        cycles=tuple(cycles),
        witness=witness[0] if witness else None,
        witness_mean=witness[1] if witness else None,
    )


def random_closed_walk(g: AnyGraph, start: int, steps: int, rng: random.Random) -> List[int]:
    """A random walk of ``steps`` steps from ``start`` closed by a shortest path back to it."""
    dg = as_digraph(g)
    walk = [start]
    for _ in range(steps):
        walk.append(rng.choice(dg.successors(walk[-1])))
    try:
        back = nx.shortest_path(dg.to_networkx(), walk[-1], start)
    except nx.NetworkXNoPath:
        raise StructureError(f"vertex {start} is not reachable from {walk[-1]}")
    if len(back) == 1 and len(walk) == 1:
        raise StructureError("a closed walk needs at least one step")
    return walk + back[1:]


def closed_walk_means(
    g: AnyGraph, c: VertexWeights, f: EdgeWeights, walks: int, steps: int, seed: int = 0
) -> List[Fraction]:
    """Means of ``walks`` random closed walks; each decomposes into simple cycles."""
    rng = random.Random(seed)
    dg = as_digraph(g)
    means = []
    for _ in range(walks):
        start = rng.randrange(dg.vertex_count)
        means.append(closed_walk_mean(dg, c, f, random_closed_walk(dg, start, max(steps, 1), rng)))
    return means
