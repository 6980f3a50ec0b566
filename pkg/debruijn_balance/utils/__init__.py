from .constants import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, exit_code_for
from .exceptions import (
    AssertionFailure,
    CapacityError,
    DeBruijnBalanceError,
    DomainError,
    HorizonError,
    ParseError,
    RegularityError,
    SinkError,
    StructureError,
)
from .rationals import format_rational, parse_rational

__all__ = [
    "EXIT_OK",
    "EXIT_VERIFICATION_FAILED",
    "EXIT_USAGE",
    "EXIT_CAPACITY",
    "exit_code_for",
    "DeBruijnBalanceError",
    "DomainError",
    "CapacityError",
    "StructureError",
    "ParseError",
    "SinkError",
    "HorizonError",
    "RegularityError",
    "AssertionFailure",
    "format_rational",
    "parse_rational",
]
