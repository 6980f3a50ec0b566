import logging
from typing import Iterable, List, Optional

from ..core.graph import DeBruijnGraph, VertexWeights
from ..core.value import (
    CarolStrategy,
    GameConfig,
    TurnSet,
    expected_cost_under_strategy,
    play_out,
    solve_dpp,
    solve_maxmin,
    solve_mixed,
    value_closed_form,
)
from ..formats import serialize_value_rows
from ..utils.constants import EXIT_VERIFICATION_FAILED
from ..utils.exceptions import AssertionFailure, DeBruijnBalanceError
from .types import ToolResponse, failure

logger = logging.getLogger(__name__)


class GameTools:
    """Tools for solving the edge-weighting game on B(n, d)."""

    def solve(
        self,
        graph: DeBruijnGraph,
        c: VertexWeights,
        T: int,
        mixed: Optional[Iterable[int]] = None,
        maxmin: bool = False,
        decimal: Optional[int] = None,
    ) -> ToolResponse:
        """Value table of the min-max game, optionally checked against the swapped and mixed games.

        Args:
            graph: the deBruijn graph
            c: vertex weights
            T: horizon
            mixed: turns at which Paul sets the weights (all others are swapped)
            maxmin: also solve the fully swapped game
            decimal: print values rounded to this many digits

        Returns:
            Dictionary with the value table, its text rows and the equality-check lines
        """
        try:
            cfg = GameConfig(graph, c, T)
            table = solve_dpp(cfg)
            checks: List[str] = []
            if mixed is not None:
                turns = TurnSet.of(mixed, T)
                checks.append(self._equality_line("mixed_equals_baseline", lambda: solve_mixed(cfg, turns)))
            if maxmin:
                checks.append(self._equality_line("maxmin_equals_baseline", lambda: solve_maxmin(cfg)))
            text = serialize_value_rows(table.rows(), decimal) + "".join(f"{line}\n" for line in checks)
            if any(line.endswith("false") for line in checks):
                return {
                    "success": False,
                    "error": "a swapped game's value differs from the min-max value",
                    "exit_code": EXIT_VERIFICATION_FAILED,
                    "text": text,
                    "table": table,
                    "checks": checks,
                }
            return {"success": True, "table": table, "checks": checks, "text": text}
        except DeBruijnBalanceError as e:
            return failure("solve game", e)

    @staticmethod
    def _equality_line(label: str, solve) -> str:
        try:
            solve()
        except AssertionFailure as e:
            logger.error("%s", e)
            return f"{label} false"
        return f"{label} true"

    def closed_form_check(self, graph: DeBruijnGraph, c: VertexWeights, T: int) -> ToolResponse:
        """Compare backward induction with the closed-form value at every (t, m)."""
        try:
            cfg = GameConfig(graph, c, T)
            table = solve_dpp(cfg)
            mismatch = next(
                (
                    (t, m)
                    for t in range(T + 1)
                    for m in graph.vertices
                    if value_closed_form(cfg, t, m) != table.value(t, m)
                ),
                None,
            )
            return {"success": True, "equal": mismatch is None, "first_mismatch": mismatch}
        except DeBruijnBalanceError as e:
            return failure("check closed form", e)

    def strategy_check(self, graph: DeBruijnGraph, c: VertexWeights, T: int, strategy: CarolStrategy) -> ToolResponse:
        """Check that a randomizing Carol pays exactly v(t, m) against the equalizing weights."""
        try:
            cfg = GameConfig(graph, c, T)
            table = solve_dpp(cfg)
            mismatch = next(
                (
                    (t, m)
                    for t in range(T)
                    for m in graph.vertices
                    if expected_cost_under_strategy(cfg, table, strategy, t, m) != table.value(t, m)
                ),
                None,
            )
            return {"success": True, "equal": mismatch is None, "first_mismatch": mismatch}
        except DeBruijnBalanceError as e:
            return failure("check Carol strategy", e)

    def play(
        self, graph: DeBruijnGraph, c: VertexWeights, T: int, start: int, choices: Optional[List[int]] = None
    ) -> ToolResponse:
        """Play one game with Paul equalizing; the path cost equals v(0, start)."""
        try:
            cfg = GameConfig(graph, c, T)
            graph.check_vertex(start)
            table = solve_dpp(cfg)
            record = play_out(cfg, table, start, choices)
            return {
                "success": True,
                "path": list(record.path),
                "digits": list(record.digits),
                "cost": record.cost,
                "value": table.value(0, start),
            }
        except DeBruijnBalanceError as e:
            return failure("play game", e)
