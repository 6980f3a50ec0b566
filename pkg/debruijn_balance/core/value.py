"""
Backward induction for the repeated edge-weighting game on B(n, d).

At turn t and vertex m Paul assigns weights f(t, (m, m|l)) summing to zero over l, then Carol
moves the token to some m|l. The value v(t, m) is the optimally played remaining cost. Paul's
min over f is resolved by the equalizing assignment

    f(t, (m, m|l)) = mean_l' v(t+1, m|l') - v(t+1, m|l)

which makes every option c(m) + f + v(t+1, m|l) equal, so v(t, m) = c(m) + mean_l v(t+1, m|l).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .graph import DeBruijnGraph, VertexWeights
from ..utils.exceptions import AssertionFailure, DomainError

logger = logging.getLogger(__name__)

MINMAX = "minmax"
MAXMIN = "maxmin"
MIXED = "mixed"

Slice = Tuple[Fraction, ...]


@dataclass(frozen=True)
class GameConfig:
    """Horizon T, graph and vertex weights of one game."""

    graph: DeBruijnGraph
    c: VertexWeights
    T: int

    def __post_init__(self):
        if self.T < 0:
            raise DomainError(f"horizon T must be non-negative, got {self.T}")
        self.c.check_for(self.graph)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def d(self) -> int:
        return self.graph.d


@dataclass(frozen=True)
class TurnSet:
    """Turns at which Paul assigns weights and Carol moves; the other turns swap roles."""

    members: FrozenSet[int]
    T: int

    @classmethod
    def of(cls, members: Iterable[int], T: int) -> "TurnSet":
        turns = frozenset(members)
        bad = sorted(t for t in turns if not 0 <= t < T)
        if bad:
            raise DomainError(f"turns {bad} outside 0..{T - 1}")
        return cls(turns, T)

    def __contains__(self, t: object) -> bool:
        return t in self.members


@dataclass(frozen=True)
class CarolStrategy:
    """Carol's probability vector over digits, per (t, m), with an optional default vector."""

    vectors: Dict[Tuple[int, int], Tuple[Fraction, ...]] = field(default_factory=dict)
    default: Optional[Tuple[Fraction, ...]] = None

    @classmethod
    def uniform(cls, n: int) -> "CarolStrategy":
        return cls(default=tuple(Fraction(1, n) for _ in range(n)))

    @classmethod
    def point_mass(cls, n: int, digit: int) -> "CarolStrategy":
        return cls(default=tuple(Fraction(int(i == digit)) for i in range(n)))

    def at(self, t: int, m: int, n: int) -> Tuple[Fraction, ...]:
        alpha = self.vectors.get((t, m), self.default)
        if alpha is None:
            raise DomainError(f"no probability vector for turn {t}, vertex {m}")
        if len(alpha) != n:
            raise DomainError(f"probability vector has {len(alpha)} entries, expected {n}")
        if any(p < 0 for p in alpha) or sum(alpha, Fraction(0)) != 1:
            raise DomainError(f"invalid probability vector {[str(p) for p in alpha]}")
        return tuple(Fraction(p) for p in alpha)


@dataclass(frozen=True)
class ValueTable:
    """v(t, m) for t = 0..T and every vertex, plus the per-turn optimal edge weights."""

    graph: DeBruijnGraph
    T: int
    values: Tuple[Slice, ...]
    variant: str = MINMAX
    turn_set: Optional[FrozenSet[int]] = None
    # weights[t][m][l] = f(t, (m, m|l)) for t < T
    weights: Tuple[Tuple[Slice, ...], ...] = ()

    def value(self, t: int, m: int) -> Fraction:
        if not 0 <= t <= self.T:
            raise DomainError(f"turn {t} outside 0..{self.T}")
        return self.values[t][m]

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        t, m = key
        return self.value(t, m)

    def slice(self, t: int) -> Slice:
        if not 0 <= t <= self.T:
            raise DomainError(f"turn {t} outside 0..{self.T}")
        return self.values[t]

    def game_cost(self, k: int, m: int) -> Fraction:
        """U(k, m): cost of an optimally played game of k turns from m."""
        return self.value(self.T - k, m)

    def first_difference(self, other: "ValueTable") -> Optional[Tuple[int, int]]:
        if self.T != other.T or self.graph != other.graph:
            return (-1, -1)
        for t in range(self.T + 1):
            for m in self.graph.vertices:
                if self.values[t][m] != other.values[t][m]:
                    return (t, m)
        return None

    def rows(self) -> List[Tuple[int, int, Fraction]]:
        return [(t, m, self.values[t][m]) for t in range(self.T + 1) for m in self.graph.vertices]


def equalizing_weights(next_values: Sequence[Fraction]) -> List[Fraction]:
    """Paul's optimal weights: they sum to zero and equalize all of Carol's options."""
    mean = sum(next_values, Fraction(0)) / len(next_values)
    return [mean - value for value in next_values]


def _minmax_step(c_m: Fraction, next_values: Sequence[Fraction]) -> Tuple[Fraction, List[Fraction]]:
    # Paul minimizes the largest option; Carol takes the maximum.
    f = equalizing_weights(next_values)
    return max(c_m + f_l + v_l for f_l, v_l in zip(f, next_values)), f


def _maxmin_step(c_m: Fraction, next_values: Sequence[Fraction]) -> Tuple[Fraction, List[Fraction]]:
    # The weight-setter maximizes the smallest option; the mover takes the minimum.
    f = equalizing_weights(next_values)
    return min(c_m + f_l + v_l for f_l, v_l in zip(f, next_values)), f


Step = Callable[[Fraction, Sequence[Fraction]], Tuple[Fraction, List[Fraction]]]


def _backward_induction(cfg: GameConfig, step_for_turn: Callable[[int], Step]) -> Tuple[List[Slice], List]:
    g, c = cfg.graph, cfg.c
    slices: List[Slice] = [tuple()] * (cfg.T + 1)
    weights: List = [tuple()] * cfg.T
    slices[cfg.T] = tuple(c[m] for m in g.vertices)
    for t in range(cfg.T - 1, -1, -1):
        step = step_for_turn(t)
        following = slices[t + 1]
        current, turn_weights = [], []
        for m in g.vertices:
            value, f = step(c[m], [following[s] for s in g.successors(m)])
            current.append(value)
            turn_weights.append(tuple(f))
        slices[t] = tuple(current)
        weights[t] = tuple(turn_weights)
    logger.debug("backward induction over %d turns on %d vertices", cfg.T, g.N)
    return slices, weights


def solve_dpp(cfg: GameConfig) -> ValueTable:
    """Value table of the min-max game."""
    slices, weights = _backward_induction(cfg, lambda t: _minmax_step)
    return ValueTable(cfg.graph, cfg.T, tuple(slices), MINMAX, None, tuple(weights))


def _check_equal(table: ValueTable, baseline: ValueTable, label: str) -> None:
    diff = table.first_difference(baseline)
    if diff is not None:
        t, m = diff
        raise AssertionFailure(
            f"{label} value differs from the min-max value at turn {t}, vertex {m}: "
            f"{table.values[t][m]} != {baseline.values[t][m]}"
        )


def solve_maxmin(cfg: GameConfig) -> ValueTable:
    """Value table of the swapped game (weight-setter maximizes, mover minimizes)."""
    slices, weights = _backward_induction(cfg, lambda t: _maxmin_step)
    table = ValueTable(cfg.graph, cfg.T, tuple(slices), MAXMIN, None, tuple(weights))
    _check_equal(table, solve_dpp(cfg), "max-min")
    return table


def solve_mixed(cfg: GameConfig, S: TurnSet) -> ValueTable:
    """Value table when Paul sets weights on turns in S and Carol on the others."""
    if S.T != cfg.T:
        raise DomainError(f"turn set was built for horizon {S.T}, game has horizon {cfg.T}")
    slices, weights = _backward_induction(cfg, lambda t: _minmax_step if t in S else _maxmin_step)
    table = ValueTable(cfg.graph, cfg.T, tuple(slices), MIXED, S.members, tuple(weights))
    _check_equal(table, solve_dpp(cfg), "mixed")
    return table


def value_slice(cfg: GameConfig, t: int) -> Slice:
    """v(t, .) with only two slices held in memory."""
    if not 0 <= t <= cfg.T:
        raise DomainError(f"turn {t} outside 0..{cfg.T}")
    g, c = cfg.graph, cfg.c
    current: Slice = tuple(c[m] for m in g.vertices)
    for _ in range(cfg.T - t):
        following = current
        current = tuple(
            c[m] + sum((following[s] for s in g.successors(m)), Fraction(0)) / g.n for m in g.vertices
        )
    return current


def layer_average(g: DeBruijnGraph, c: VertexWeights, m: int, depth: int) -> Fraction:
    """(1/n^depth) * sum of c(m|l1|...|l_depth) over all digit words of the given length."""
    if depth <= g.d:
        width = g.n**depth
        base = (m % g.n ** (g.d - depth)) * width
        return sum((c[base + w] for w in range(width)), Fraction(0)) / width
    # Longer words reach every vertex n^(depth-d) times.
    return c.mean()


def _check_turn(cfg: GameConfig, t: int) -> int:
    if not 0 <= t <= cfg.T:
        raise DomainError(f"turn {t} outside 0..{cfg.T}")
    return cfg.T - t


def explicit_sum(cfg: GameConfig, t: int, m: int) -> Fraction:
    """The explicit layered sum c(m) + (1/n) sum c(m|l1) + ... up to T - t digits."""
    horizon = _check_turn(cfg, t)
    return sum((layer_average(cfg.graph, cfg.c, m, i) for i in range(horizon + 1)), Fraction(0))


def collapsed_sum(cfg: GameConfig, t: int, m: int) -> Fraction:
    """Layers below d plus (T - t - d + 1) copies of the global mean; needs T - t >= d - 1."""
    horizon = _check_turn(cfg, t)
    if horizon < cfg.d - 1:
        raise DomainError(f"collapsed form needs T - t >= d - 1, got T - t = {horizon}")
    head = sum((layer_average(cfg.graph, cfg.c, m, i) for i in range(cfg.d)), Fraction(0))
    return head + (horizon - cfg.d + 1) * cfg.c.mean()


def value_closed_form(cfg: GameConfig, t: int, m: int) -> Fraction:
    cfg.graph.check_vertex(m)
    horizon = _check_turn(cfg, t)
    if horizon > cfg.d:
        return collapsed_sum(cfg, t, m)
    # T - t == d goes through the generic sum as well.
    return explicit_sum(cfg, t, m)


def optimal_edge_weights(cfg: GameConfig, vt: ValueTable, t: int, m: int) -> List[Fraction]:
    """f(t, (m, m|l)) for l = 0..n-1."""
    if not 0 <= t < cfg.T:
        raise DomainError(f"edge weights exist only for turns 0..T-1, got {t}")
    following = vt.slice(t + 1)
    return equalizing_weights([following[s] for s in cfg.graph.successors(m)])


def expected_cost_under_strategy(
    cfg: GameConfig, vt: ValueTable, strat: CarolStrategy, t: int, m: int
) -> Fraction:
    """One-step expected cost when Paul equalizes and Carol randomizes."""
    f = optimal_edge_weights(cfg, vt, t, m)
    alpha = strat.at(t, m, cfg.n)
    following = vt.slice(t + 1)
    successors = cfg.graph.successors(m)
    return sum(
        (p * (cfg.c[m] + f_l + following[s]) for p, f_l, s in zip(alpha, f, successors)),
        Fraction(0),
    )


@dataclass(frozen=True)
class PlayRecord:
    path: Tuple[int, ...]
    digits: Tuple[int, ...]
    cost: Fraction


def play_out(cfg: GameConfig, vt: ValueTable, start: int, choices: Optional[Sequence[int]] = None) -> PlayRecord:
    """Play the game from turn 0 with Paul equalizing.

    Carol follows ``choices`` when given; otherwise she takes the costliest option, lowest digit on ties.
    """
    if choices is not None and len(choices) != cfg.T:
        raise DomainError(f"need {cfg.T} choices, got {len(choices)}")
    g, c = cfg.graph, cfg.c
    m = start
    path, digits = [m], []
    cost = c[m]
    for t in range(cfg.T):
        f = optimal_edge_weights(cfg, vt, t, m)
        if choices is not None:
            digit = choices[t]
            if not 0 <= digit < g.n:
                raise DomainError(f"digit {digit} outside 0..{g.n - 1}")
        else:
            following = vt.slice(t + 1)
            options = [f_l + following[s] for f_l, s in zip(f, g.successors(m))]
            digit = options.index(max(options))
        cost += f[digit]
        m = g.successor(m, digit)
        cost += c[m]
        path.append(m)
        digits.append(digit)
    return PlayRecord(tuple(path), tuple(digits), cost)


def grid_minimax(next_values: Sequence[Fraction], grid: Iterable[Fraction]) -> Tuple[Fraction, Fraction]:
    """Brute-force Paul's choice for n = 2 over f = (x, -x), x in ``grid``.

    Returns (best worst-case option, minimizing x).
    """
    if len(next_values) != 2:
        raise DomainError("grid search is only defined for two successors")
    a, b = next_values
    best: Optional[Tuple[Fraction, Fraction]] = None
    for x in grid:
        worst = max(x + a, -x + b)
        if best is None or worst < best[0]:
            best = (worst, x)
    if best is None:
        raise DomainError("empty grid")
    return best


def grid_maximin(next_values: Sequence[Fraction], grid: Iterable[Fraction]) -> Tuple[Fraction, Fraction]:
    """Brute-force the swapped game's weight choice for n = 2: max over x of the cheaper option.

    Returns (best guaranteed option, maximizing x).
    """
    if len(next_values) != 2:
        raise DomainError("grid search is only defined for two successors")
    a, b = next_values
    best: Optional[Tuple[Fraction, Fraction]] = None
    for x in grid:
        cheapest = min(x + a, -x + b)
        if best is None or cheapest > best[0]:
            best = (cheapest, x)
    if best is None:
        raise DomainError("empty grid")
    return best
