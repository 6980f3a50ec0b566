import os
from dataclasses import dataclass, replace
from typing import Optional

from .utils.constants import (
    CYCLE_CAP_ENV,
    DEFAULT_CYCLE_CAP,
    DEFAULT_RANK_VERTEX_CAP,
    DEFAULT_SYSTEM_CYCLE_CAP,
    DEFAULT_VERTEX_CAP,
    SYSTEM_CYCLE_CAP_ENV,
    VERTEX_CAP_ENV,
)
from .utils.exceptions import DomainError


@dataclass(frozen=True)
class Settings:
    """Size caps shared by the solvers and the CLI."""

    vertex_cap: int = DEFAULT_VERTEX_CAP
    cycle_cap: int = DEFAULT_CYCLE_CAP
    system_cycle_cap: int = DEFAULT_SYSTEM_CYCLE_CAP
    rank_vertex_cap: int = DEFAULT_RANK_VERTEX_CAP

    def with_cycle_cap(self, cycle_cap: Optional[int]) -> "Settings":
        if cycle_cap is None:
            return self
        if cycle_cap < 1:
            raise DomainError(f"cycle cap must be positive, got {cycle_cap}")
        return replace(self, cycle_cap=cycle_cap)


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise DomainError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def initialize_config() -> Settings:
    """Initialize the settings from the environment."""
    return Settings(
        vertex_cap=_int_from_env(VERTEX_CAP_ENV, DEFAULT_VERTEX_CAP),
        cycle_cap=_int_from_env(CYCLE_CAP_ENV, DEFAULT_CYCLE_CAP),
        system_cycle_cap=_int_from_env(SYSTEM_CYCLE_CAP_ENV, DEFAULT_SYSTEM_CYCLE_CAP),
    )
