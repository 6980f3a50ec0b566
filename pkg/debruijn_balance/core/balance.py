"""
The balanced edge-weight assignment of B(n, d).

Early enough in a long game Paul's optimal weights stop depending on the turn. That common
assignment f sums to zero out of every vertex, and every cycle of the doubly weighted graph (c, f)
then has the same mean, the mean vertex weight. This module extracts f, checks the stationarity,
the discrete Poisson identity and the overdetermined cycle-constraint system it solves.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .graph import Cycle, DeBruijnGraph, Edge, VertexWeights, cycle_edges
from .linalg import UNIQUE, rank_exact, solve_exact
from .models import BalanceReport, StationarityCheck, SystemStats
from .value import GameConfig, ValueTable, equalizing_weights, optimal_edge_weights, solve_dpp, value_closed_form
from ..utils.constants import DEFAULT_RANK_VERTEX_CAP, DEFAULT_SYSTEM_CYCLE_CAP
from ..utils.exceptions import CapacityError, DomainError, HorizonError, StructureError

logger = logging.getLogger(__name__)


class EdgeWeightAssignment(Mapping):
    """Edge weights f keyed by (src, dst); iteration is in (src, dst) order."""

    def __init__(self, weights: Dict[Edge, Fraction]):
        self._weights = {edge: Fraction(value) for edge, value in sorted(weights.items())}

    def __getitem__(self, edge: Edge) -> Fraction:
        return self._weights[edge]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __repr__(self) -> str:
        return f"EdgeWeightAssignment({len(self._weights)} edges)"

    @classmethod
    def zeros(cls, edges: Iterable[Edge]) -> "EdgeWeightAssignment":
        return cls({edge: Fraction(0) for edge in edges})

    def perturbed(self, edge: Edge, delta: Fraction) -> "EdgeWeightAssignment":
        if edge not in self._weights:
            raise StructureError(f"{edge[0]}->{edge[1]} carries no weight")
        weights = dict(self._weights)
        weights[edge] += delta
        return EdgeWeightAssignment(weights)

    def source_sums(self) -> Dict[int, Fraction]:
        sums: Dict[int, Fraction] = {}
        for (u, _), value in self._weights.items():
            sums[u] = sums.get(u, Fraction(0)) + value
        return sums

    def first_nonzero_source(self) -> Optional[int]:
        """First vertex whose outgoing weights do not sum to zero."""
        return next((u for u, total in self.source_sums().items() if total != 0), None)

    def covers(self, g: DeBruijnGraph) -> bool:
        return set(self._weights) == set(g.edges())


def stationary_weights(cfg: GameConfig) -> EdgeWeightAssignment:
    """f(m, m|l) read off the closed-form values at turn 1."""
    g = cfg.graph
    if cfg.T < g.d + 1:
        raise HorizonError(f"stationary weights need T >= d + 1 = {g.d + 1}, got T = {cfg.T}")
    following = [value_closed_form(cfg, 1, m) for m in g.vertices]
    weights = {}
    for m in g.vertices:
        successors = g.successors(m)
        for s, f in zip(successors, equalizing_weights([following[s] for s in successors])):
            weights[(m, s)] = f
    return EdgeWeightAssignment(weights)


def balanced_assignment(g: DeBruijnGraph, c: VertexWeights) -> EdgeWeightAssignment:
    return stationary_weights(GameConfig(g, c, g.d + 1))


def verify_stationarity(cfg: GameConfig, vt: ValueTable) -> StationarityCheck:
    """Compare the optimal weights of turns 1..T-d-1 with turn 0, and report turn T-d separately."""
    g = cfg.graph
    boundary = cfg.T - g.d
    if boundary < 1:
        return StationarityCheck(True, None, None)
    reference = [optimal_edge_weights(cfg, vt, 0, m) for m in g.vertices]

    def first_mismatch(t: int) -> Optional[Edge]:
        for m in g.vertices:
            current = optimal_edge_weights(cfg, vt, t, m)
            for digit, (a, b) in enumerate(zip(reference[m], current)):
                if a != b:
                    return (m, g.successor(m, digit))
        return None

    for t in range(1, boundary):
        edge = first_mismatch(t)
        if edge is not None:
            logger.debug("optimal weights change at turn %d on edge %s", t, edge)
            return StationarityCheck(False, (t, edge), None)
    return StationarityCheck(True, None, first_mismatch(boundary) is None)


def poisson_residual(cfg: GameConfig, vt: ValueTable, t: int) -> Dict[int, Fraction]:
    """[v(t,m) - mean_l v(t,m|l)] - [c(m) - mean(c)] for every vertex."""
    g = cfg.graph
    if not 0 <= t < cfg.T - g.d:
        raise DomainError(f"Poisson identity needs 0 <= t < T - d = {cfg.T - g.d}, got {t}")
    values = vt.slice(t)
    mean = cfg.c.mean()
    residual = {}
    for m in g.vertices:
        laplacian = values[m] - sum((values[s] for s in g.successors(m)), Fraction(0)) / g.n
        residual[m] = laplacian - (cfg.c[m] - mean)
    return residual


def cycle_weight_from_values(vt: ValueTable, m: int, k: int, s: int) -> Fraction:
    """v(T-s-k, m) - v(T-s, m): the weight of a length-k cycle at m traversed s turns before the end."""
    if k < 1 or s < 0 or vt.T - s - k < 0:
        raise DomainError(f"need k >= 1, s >= 0 and s + k <= T, got k={k}, s={s}, T={vt.T}")
    return vt.value(vt.T - s - k, m) - vt.value(vt.T - s, m)


@dataclass(frozen=True)
class CycleConstraintSystem:
    """One equation per simple cycle plus one sum-zero equation per vertex; unknowns are the edges."""

    graph: DeBruijnGraph
    edges: Tuple[Edge, ...]
    rows: Tuple[Tuple[int, ...], ...]
    rhs: Tuple[Fraction, ...]
    cycle_count: int

    def _vector(self, f: Mapping) -> List[Fraction]:
        try:
            return [Fraction(f[edge]) for edge in self.edges]
        except KeyError as e:
            raise StructureError(f"assignment has no weight for edge {e.args[0]}")

    def first_violation(self, f: Mapping) -> Optional[int]:
        x = self._vector(f)
        for i, (row, b) in enumerate(zip(self.rows, self.rhs)):
            if sum((a * v for a, v in zip(row, x) if a), Fraction(0)) != b:
                return i
        return None

    def verify(self, f: Mapping) -> bool:
        return self.first_violation(f) is None

    def reduced_rows(self) -> List[List[int]]:
        """Cycle rows in the coordinates f(m, m|l), l < n-1, after eliminating f(m, m|n-1)."""
        g = self.graph
        width = g.n - 1
        reduced = []
        for row in self.rows[: self.cycle_count]:
            out = [0] * (g.N * width)
            for (u, w), a in zip(self.edges, row):
                if not a:
                    continue
                digit = w % g.n
                if digit < width:
                    out[u * width + digit] += a
                else:
                    for other in range(width):
                        out[u * width + other] -= a
            reduced.append(out)
        return reduced

    def stats(self, f: Optional[Mapping] = None, rank_vertex_cap: int = DEFAULT_RANK_VERTEX_CAP) -> SystemStats:
        g = self.graph
        rank = full_rank = None
        if g.N <= rank_vertex_cap:
            rank = rank_exact(self.reduced_rows())
            # Rank ignores row order; sum-zero rows first saturate it sooner.
            full_rank = rank_exact(self.rows[self.cycle_count :] + self.rows[: self.cycle_count])
        return SystemStats(
            equations=len(self.rows),
            cycle_equations=self.cycle_count,
            sum_zero_equations=len(self.rows) - self.cycle_count,
            variables=len(self.edges),
            reduced_variables=(g.n - 1) * g.N,
            satisfied=None if f is None else self.verify(f),
            rank=rank,
            full_rank=full_rank,
        )


def cycle_constraint_system(
    g: DeBruijnGraph,
    c: VertexWeights,
    cycles: Sequence[Cycle],
    cap: int = DEFAULT_SYSTEM_CYCLE_CAP,
) -> CycleConstraintSystem:
    if len(cycles) > cap:
        raise CapacityError(f"{len(cycles)} cycles exceed the system assembly cap of {cap}")
    c.check_for(g)
    edges = tuple(g.edges())
    index = {edge: i for i, edge in enumerate(edges)}
    mean = c.mean()
    rows, rhs = [], []
    for cyc in cycles:
        row = [0] * len(edges)
        for edge in cycle_edges(cyc):
            if edge not in index:
                raise StructureError(f"{edge[0]}->{edge[1]} is not an edge")
            row[index[edge]] += 1
        vertices = {u for u, _ in cycle_edges(cyc)}
        rows.append(tuple(row))
        rhs.append(len(vertices) * mean - sum((c[v] for v in vertices), Fraction(0)))
    for m in g.vertices:
        row = [0] * len(edges)
        for s in g.successors(m):
            row[index[(m, s)]] = 1
        rows.append(tuple(row))
        rhs.append(Fraction(0))
    logger.debug("cycle system: %d equations in %d unknowns", len(rows), len(edges))
    return CycleConstraintSystem(g, edges, tuple(rows), tuple(rhs), len(cycles))


def solve_cycle_system(system: CycleConstraintSystem) -> Optional[EdgeWeightAssignment]:
    """The system's solution when it is consistent and unique, otherwise None."""
    solution = solve_exact(system.rows, system.rhs)
    if solution.status != UNIQUE:
        logger.debug("cycle system is %s", solution.status)
        return None
    return EdgeWeightAssignment(dict(zip(system.edges, solution.values)))


def poisson_residual_max(cfg: GameConfig, vt: ValueTable) -> Optional[Fraction]:
    """Largest |residual| over every turn of the window, None when the window is empty."""
    turns = range(max(cfg.T - cfg.d, 0))
    if not turns:
        return None
    return max(abs(r) for t in turns for r in poisson_residual(cfg, vt, t).values())


def balance_report(
    cfg: GameConfig,
    f: EdgeWeightAssignment,
    vt: Optional[ValueTable] = None,
    system: Optional[CycleConstraintSystem] = None,
    rank_vertex_cap: int = DEFAULT_RANK_VERTEX_CAP,
) -> BalanceReport:
    vt = vt if vt is not None else solve_dpp(cfg)
    check = verify_stationarity(cfg, vt)
    return BalanceReport(
        n=cfg.n,
        d=cfg.d,
        global_mean=cfg.c.mean(),
        poisson_residual_max=poisson_residual_max(cfg, vt),
        sum_zero=f.first_nonzero_source() is None,
        stationary=check.stationary,
        stationary_boundary=check.boundary_matches,
        system=system.stats(f, rank_vertex_cap) if system is not None else None,
    )
