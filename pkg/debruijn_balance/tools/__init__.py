from .balance import BalanceTools
from .cycles import CycleTools
from .game import GameTools
from .general import GeneralTools
from .graph import GraphTools
from .types import ToolResponse

__all__ = ["GraphTools", "GameTools", "BalanceTools", "CycleTools", "GeneralTools", "ToolResponse"]
