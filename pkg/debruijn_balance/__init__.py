from debruijn_balance.config import Settings, initialize_config
from debruijn_balance.core import (
    BalanceReport,
    CycleReport,
    DeBruijnGraph,
    Digraph,
    EdgeWeightAssignment,
    GameConfig,
    ValueTable,
    VertexWeights,
    build_debruijn,
    solve_dpp,
    stationary_weights,
)
from debruijn_balance.tools import BalanceTools, CycleTools, GameTools, GeneralTools, GraphTools
from debruijn_balance.utils import DeBruijnBalanceError
from debruijn_balance.utils.cache import GraphCache

__version__ = "0.1.0"

__all__ = [
    # Core
    "DeBruijnGraph",
    "Digraph",
    "VertexWeights",
    "EdgeWeightAssignment",
    "GameConfig",
    "ValueTable",
    "BalanceReport",
    "CycleReport",
    "build_debruijn",
    "solve_dpp",
    "stationary_weights",
    # Tools
    "GraphTools",
    "GameTools",
    "BalanceTools",
    "CycleTools",
    "GeneralTools",
    # Utils
    "GraphCache",
    "DeBruijnBalanceError",
    # Config
    "Settings",
    "initialize_config",
]
