from typing import List, Optional

import networkx as nx

from ..config import Settings, initialize_config
from ..core.balance import poisson_residual_max
from ..core.cycles import closed_walk_means, verify_equal_means
from ..core.graph import AnyGraph, DeBruijnGraph, EdgeWeights, VertexWeights, as_digraph
from ..core.value import GameConfig, solve_dpp
from ..utils.constants import EXIT_CAPACITY, EXIT_OK, EXIT_VERIFICATION_FAILED
from ..utils.exceptions import DeBruijnBalanceError
from ..utils.rationals import format_rational
from .types import ToolResponse, failure

SPOT_CHECK_WALKS = 16


class CycleTools:
    """Tools for verifying that every cycle of a doubly weighted graph has the same mean."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or initialize_config()

    def verify(
        self,
        graph: AnyGraph,
        c: VertexWeights,
        f: EdgeWeights,
        debruijn: Optional[DeBruijnGraph] = None,
        decimal: Optional[int] = None,
        include_cycles: bool = False,
    ) -> ToolResponse:
        """Cycle-mean verdict for (c, f), plus the Poisson residual on deBruijn inputs.

        The exit code is 0 when verified, 1 with a witness otherwise, and 3 when the enumeration
        hit the cycle cap and only the min/max oracle could be consulted.
        """
        try:
            report = verify_equal_means(graph, c, f, self.settings.cycle_cap)
            target = report.target_mean
            walk_means = []
            if nx.is_strongly_connected(as_digraph(graph).to_networkx()):
                walk_means = closed_walk_means(graph, c, f, SPOT_CHECK_WALKS, 2 * graph.vertex_count)
            walks_equal = all(mean == target for mean in walk_means)

            residual = None
            if debruijn is not None:
                cfg = GameConfig(debruijn, c, debruijn.d + 2)
                residual = poisson_residual_max(cfg, solve_dpp(cfg))

            lines: List[str] = report.to_lines(decimal, include_cycles)
            lines.append(f"closed_walks {len(walk_means)}")
            lines.append(f"closed_walks_equal {'true' if walks_equal else 'false'}")
            if residual is not None:
                lines.append(f"poisson_residual_max {format_rational(residual, decimal)}")

            verified = report.verified and walks_equal and (residual is None or residual == 0)
            if not report.enumeration_complete:
                exit_code = EXIT_CAPACITY
            else:
                exit_code = EXIT_OK if verified else EXIT_VERIFICATION_FAILED
            lines.append(f"verdict {self._verdict(report.enumeration_complete, verified)}")
            return {
                "success": exit_code == EXIT_OK,
                "report": report,
                "verified": verified,
                "exit_code": exit_code,
                "lines": lines,
            }
        except DeBruijnBalanceError as e:
            return failure("verify cycle means", e)

    @staticmethod
    def _verdict(complete: bool, verified: bool) -> str:
        if not complete:
            return "partial-verified" if verified else "partial-failed"
        return "verified" if verified else "failed"
