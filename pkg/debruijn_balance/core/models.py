from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..utils.rationals import format_rational


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return "n/a"
    return "true" if value else "false"


def _number(value: Optional[Fraction], decimal: Optional[int]) -> str:
    return "n/a" if value is None else format_rational(value, decimal)


def _count(value: Optional[int]) -> str:
    return "n/a" if value is None else str(value)


@dataclass(frozen=True)
class SystemStats:
    """Size and rank of the cycle-constraint system."""

    equations: int
    cycle_equations: int
    sum_zero_equations: int
    variables: int
    reduced_variables: int
    satisfied: Optional[bool] = None
    rank: Optional[int] = None
    full_rank: Optional[int] = None

    @property
    def unique(self) -> Optional[bool]:
        if self.rank is None:
            return None
        return self.rank == self.reduced_variables

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "equations": self.equations,
            "cycle_equations": self.cycle_equations,
            "sum_zero_equations": self.sum_zero_equations,
            "variables": self.variables,
            "reduced_variables": self.reduced_variables,
            "satisfied": self.satisfied,
            "rank": self.rank,
            "full_rank": self.full_rank,
            "unique": self.unique,
        }


@dataclass(frozen=True)
class StationarityCheck:
    """Whether the optimal edge weights agree on every turn of the stationary window."""

    stationary: bool
    first_violation: Optional[Tuple[int, Tuple[int, int]]] = None
    boundary_matches: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.stationary


@dataclass(frozen=True)
class BalanceReport:
    """Summary of one balancing run."""

    n: int
    d: int
    global_mean: Fraction
    poisson_residual_max: Optional[Fraction]
    sum_zero: bool
    stationary: Optional[bool] = None
    stationary_boundary: Optional[bool] = None
    system: Optional[SystemStats] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "n": self.n,
            "d": self.d,
            "global_mean": str(self.global_mean),
            "poisson_residual_max": None if self.poisson_residual_max is None else str(self.poisson_residual_max),
            "sum_zero": self.sum_zero,
            "stationary": self.stationary,
            "stationary_boundary": self.stationary_boundary,
            "system": self.system.to_dict() if self.system else None,
        }

    def to_lines(self, decimal: Optional[int] = None) -> List[str]:
        lines = [
            f"n {self.n}",
            f"d {self.d}",
            f"global_mean {format_rational(self.global_mean, decimal)}",
            f"poisson_residual_max {_number(self.poisson_residual_max, decimal)}",
            f"sum_zero {_flag(self.sum_zero)}",
            f"stationary {_flag(self.stationary)}",
            f"stationary_boundary {_flag(self.stationary_boundary)}",
        ]
        if self.system is None:
            lines.append("cycle_system skipped")
            return lines
        stats = self.system
        lines += [
            f"system_equations {stats.equations}",
            f"system_cycle_equations {stats.cycle_equations}",
            f"system_sum_zero_equations {stats.sum_zero_equations}",
            f"system_variables {stats.variables}",
            f"system_reduced_variables {stats.reduced_variables}",
            f"system_satisfied {_flag(stats.satisfied)}",
            f"system_rank {_count(stats.rank)}",
            f"system_full_rank {_count(stats.full_rank)}",
            f"system_unique {_flag(stats.unique)}",
        ]
        return lines


@dataclass(frozen=True)
class CycleReport:
    """Cycle means of a doubly weighted graph from both verification oracles."""

    target_mean: Fraction
    min_mean: Fraction
    max_mean: Fraction
    enumeration_complete: bool
    cycle_count: Optional[int] = None
    means: Tuple[Fraction, ...] = ()
    cycles: Tuple[Tuple[int, ...], ...] = ()
    witness: Optional[Tuple[int, ...]] = None
    witness_mean: Optional[Fraction] = None
    notes: Tuple[str, ...] = field(default=())

    @property
    def all_equal(self) -> bool:
        if self.enumeration_complete:
            return len(set(self.means)) <= 1
        return self.min_mean == self.max_mean

    @property
    def verified(self) -> bool:
        """Every cycle mean equals the target mean."""
        if self.enumeration_complete:
            return self.witness is None and self.min_mean == self.max_mean == self.target_mean
        return self.min_mean == self.max_mean == self.target_mean

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "cycle_count": self.cycle_count,
            "enumeration_complete": self.enumeration_complete,
            "target_mean": str(self.target_mean),
            "min_mean": str(self.min_mean),
            "max_mean": str(self.max_mean),
            "distinct_means": len(set(self.means)) if self.enumeration_complete else None,
            "all_equal": self.all_equal,
            "verified": self.verified,
            "witness": list(self.witness) if self.witness else None,
            "witness_mean": None if self.witness_mean is None else str(self.witness_mean),
        }

    def to_lines(self, decimal: Optional[int] = None, include_cycles: bool = False) -> List[str]:
        lines = [
            f"cycle_count {_count(self.cycle_count)}",
            f"enumeration_complete {_flag(self.enumeration_complete)}",
            f"target_mean {format_rational(self.target_mean, decimal)}",
            f"min_mean {format_rational(self.min_mean, decimal)}",
            f"max_mean {format_rational(self.max_mean, decimal)}",
            f"distinct_means {_count(len(set(self.means)) if self.enumeration_complete else None)}",
            f"all_equal {_flag(self.all_equal)}",
            f"verified {_flag(self.verified)}",
        ]
        if self.witness is None:
            lines.append("witness none")
        else:
            lines.append("witness " + " ".join(str(v) for v in self.witness))
            lines.append(f"witness_mean {format_rational(self.witness_mean, decimal)}")
        if include_cycles:
            for cyc, mean in zip(self.cycles, self.means):
                lines.append("cycle " + " ".join(str(v) for v in cyc) + f" mean {format_rational(mean, decimal)}")
        return lines
