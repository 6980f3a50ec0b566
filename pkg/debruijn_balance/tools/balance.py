import logging
from typing import Optional

from ..config import Settings, initialize_config
from ..core.balance import (
    CycleConstraintSystem,
    balance_report,
    cycle_constraint_system,
    solve_cycle_system,
    stationary_weights,
)
from ..core.cycles import list_simple_cycles
from ..core.graph import DeBruijnGraph, VertexWeights
from ..core.value import GameConfig, solve_dpp
from ..formats import serialize_edge_weights
from ..utils.exceptions import CapacityError, DeBruijnBalanceError
from .types import ToolResponse, failure

logger = logging.getLogger(__name__)


class BalanceTools:
    """Tools for extracting and checking the balanced edge-weight assignment."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or initialize_config()

    def balancing_horizon(self, graph: DeBruijnGraph) -> int:
        # Smallest horizon whose stationary window still holds two turns.
        return graph.d + 2

    def _system(self, graph: DeBruijnGraph, c: VertexWeights) -> Optional[CycleConstraintSystem]:
        if graph.N > self.settings.rank_vertex_cap:
            return None
        try:
            cycles = list_simple_cycles(graph, self.settings.system_cycle_cap)
            return cycle_constraint_system(graph, c, cycles, self.settings.system_cycle_cap)
        except CapacityError as e:
            logger.warning("cycle system skipped: %s", e)
            return None

    def balance(self, graph: DeBruijnGraph, c: VertexWeights, decimal: Optional[int] = None) -> ToolResponse:
        """Balanced assignment of B(n, d) with its report.

        Args:
            graph: the deBruijn graph
            c: vertex weights
            decimal: print values rounded to this many digits

        Returns:
            Dictionary with the assignment, the BalanceReport and their text forms
        """
        try:
            cfg = GameConfig(graph, c, self.balancing_horizon(graph))
            weights = stationary_weights(cfg)
            report = balance_report(
                cfg,
                weights,
                vt=solve_dpp(cfg),
                system=self._system(graph, c),
                rank_vertex_cap=self.settings.rank_vertex_cap,
            )
            return {
                "success": True,
                "weights": weights,
                "report": report,
                "weights_text": serialize_edge_weights(weights, decimal),
                "report_lines": report.to_lines(decimal),
            }
        except DeBruijnBalanceError as e:
            return failure("balance edge weights", e)

    def solve_system(self, graph: DeBruijnGraph, c: VertexWeights) -> ToolResponse:
        """Solve the cycle-constraint system exactly and compare with the stationary weights."""
        try:
            cycles = list_simple_cycles(graph, self.settings.system_cycle_cap)
            system = cycle_constraint_system(graph, c, cycles, self.settings.system_cycle_cap)
            solution = solve_cycle_system(system)
            expected = stationary_weights(GameConfig(graph, c, self.balancing_horizon(graph)))
            return {
                "success": True,
                "solution": solution,
                "unique": solution is not None,
                "matches_stationary": solution is not None and dict(solution) == dict(expected),
                "stats": system.stats(expected, self.settings.rank_vertex_cap).to_dict(),
            }
        except DeBruijnBalanceError as e:
            return failure("solve cycle system", e)
