from typing import Optional

from ..config import Settings, initialize_config
from ..core.graph import AnyGraph, identify_debruijn
from ..formats import parse_digraph, parse_edge_weights, parse_vertex_weights, serialize_digraph
from ..utils.cache import GraphCache
from ..utils.exceptions import DeBruijnBalanceError
from .types import ToolResponse, failure


class GraphTools:
    """Tools for building graphs and loading graph and weight files."""

    def __init__(self, settings: Optional[Settings] = None, cache: Optional[GraphCache] = None):
        self.settings = settings or initialize_config()
        self.cache = cache or GraphCache(self.settings)

    def build_graph(self, n: int, d: int) -> ToolResponse:
        """Build B(n, d) and its edge-list text."""
        try:
            g = self.cache.get_graph(n, d)
            return {
                "success": True,
                "graph": g,
                "vertex_count": g.N,
                "edge_count": g.N * g.n,
                "text": serialize_digraph(g),
            }
        except DeBruijnBalanceError as e:
            return failure("build graph", e)

    def load_graph(self, text: str) -> ToolResponse:
        """Parse an edge list; ``debruijn`` is set when the list is exactly some B(n, d)."""
        try:
            graph = parse_digraph(text)
            debruijn = identify_debruijn(graph)
            return {
                "success": True,
                "graph": graph,
                "debruijn": debruijn,
                "vertex_count": graph.vertex_count,
                "edge_count": len(graph.edges()),
            }
        except DeBruijnBalanceError as e:
            return failure("load graph", e)

    def load_vertex_weights(self, text: str, vertex_count: int) -> ToolResponse:
        try:
            weights = parse_vertex_weights(text, vertex_count)
            return {"success": True, "weights": weights, "mean": weights.mean()}
        except DeBruijnBalanceError as e:
            return failure("load vertex weights", e)

    def load_edge_weights(self, text: str, graph: AnyGraph) -> ToolResponse:
        try:
            return {"success": True, "weights": parse_edge_weights(text, graph)}
        except DeBruijnBalanceError as e:
            return failure("load edge weights", e)
