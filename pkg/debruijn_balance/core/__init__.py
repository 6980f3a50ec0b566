from .balance import EdgeWeightAssignment, balanced_assignment, stationary_weights
from .graph import DeBruijnGraph, Digraph, VertexWeights, build_debruijn
from .models import BalanceReport, CycleReport, StationarityCheck, SystemStats
from .value import GameConfig, TurnSet, ValueTable, solve_dpp

__all__ = [
    "DeBruijnGraph",
    "Digraph",
    "VertexWeights",
    "build_debruijn",
    "GameConfig",
    "TurnSet",
    "ValueTable",
    "solve_dpp",
    "EdgeWeightAssignment",
    "stationary_weights",
    "balanced_assignment",
    "BalanceReport",
    "CycleReport",
    "StationarityCheck",
    "SystemStats",
]
