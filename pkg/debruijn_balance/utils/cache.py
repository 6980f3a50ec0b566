import logging
from typing import Dict, Optional, Tuple

from ..config import Settings
from ..core.graph import DeBruijnGraph, build_debruijn

logger = logging.getLogger(__name__)


class GraphCache:
    """Cache of constructed deBruijn graphs keyed by (n, d)."""

    def __init__(self, settings: Optional[Settings] = None):
        self._cache: Optional[Dict[Tuple[int, int], DeBruijnGraph]] = None
        self._settings = settings or Settings()

    def get_graph(self, n: int, d: int) -> DeBruijnGraph:
        """Get B(n, d), building it on first use."""
        if self._cache is None:
            self._load_cache()

        key = (n, d)
        if key not in self._cache:
            self._cache[key] = build_debruijn(n, d, self._settings.vertex_cap)
        return self._cache[key]

    def _load_cache(self) -> None:
        logger.debug("graph cache initialised with vertex cap %d", self._settings.vertex_cap)
        self._cache = {}

    def __len__(self) -> int:
        return 0 if self._cache is None else len(self._cache)

    def clear(self) -> None:
        """Clear the cache."""
        self._cache = None
