from typing import List, Optional

from ..core.general import general_value, general_value_table, k_regular_value_table, simulate_walk_costs
from ..core.graph import AnyGraph, VertexWeights, as_digraph
from ..formats import serialize_value_rows, table_rows
from ..utils.constants import EXIT_VERIFICATION_FAILED
from ..utils.exceptions import DeBruijnBalanceError
from .types import ToolResponse, failure


class GeneralTools:
    """Tools for the game on arbitrary sink-free digraphs."""

    def value_table(self, graph: AnyGraph, c: VertexWeights, T: int, decimal: Optional[int] = None) -> ToolResponse:
        """Value table u(t, m); out-regular graphs are cross-checked with the walk-count formula.

        Args:
            graph: a sink-free digraph
            c: vertex weights
            T: horizon
            decimal: print values rounded to this many digits

        Returns:
            Dictionary with the table, its text rows and the regularity cross-check
        """
        try:
            slices = general_value_table(graph, c, T)
            checks: List[str] = []
            cross_check = None
            if as_digraph(graph).out_regularity() is not None:
                cross_check = k_regular_value_table(graph, c, T) == slices
                checks.append(f"k_regular_cross_check {'true' if cross_check else 'false'}")
            text = serialize_value_rows(table_rows(slices), decimal) + "".join(f"{line}\n" for line in checks)
            if cross_check is False:
                return {
                    "success": False,
                    "error": "walk-count formula disagrees with the value table",
                    "exit_code": EXIT_VERIFICATION_FAILED,
                    "text": text,
                    "table": slices,
                    "k_regular_cross_check": cross_check,
                }
            return {"success": True, "table": slices, "k_regular_cross_check": cross_check, "text": text}
        except DeBruijnBalanceError as e:
            return failure("compute general value table", e)

    def simulate(
        self, graph: AnyGraph, c: VertexWeights, T: int, t: int, m: int, episodes: int, seed: int = 0
    ) -> ToolResponse:
        """Monte Carlo estimate of u(t, m) next to the exact value."""
        try:
            exact = general_value(graph, c, T, t, m)
            mean, stderr = simulate_walk_costs(graph, c, T, t, m, episodes, seed)
            return {
                "success": True,
                "exact": exact,
                "mean": mean,
                "stderr": stderr,
                "within_4_sigma": abs(mean - float(exact)) <= 4 * stderr,
            }
        except DeBruijnBalanceError as e:
            return failure("simulate walk costs", e)
