from .exceptions import (
    AssertionFailure,
    CapacityError,
    DeBruijnBalanceError,
    DomainError,
    ParseError,
    StructureError,
)

DEFAULT_VERTEX_CAP = 2**24
DEFAULT_CYCLE_CAP = 10**6
DEFAULT_SYSTEM_CYCLE_CAP = 10**5
DEFAULT_RANK_VERTEX_CAP = 64

CYCLE_CAP_ENV = "DBB_CYCLE_CAP"
VERTEX_CAP_ENV = "DBB_VERTEX_CAP"
SYSTEM_CYCLE_CAP_ENV = "DBB_SYSTEM_CYCLE_CAP"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

# Most specific class first.
EXIT_CODES = [
    (CapacityError, EXIT_CAPACITY),
    (AssertionFailure, EXIT_VERIFICATION_FAILED),
    (ParseError, EXIT_USAGE),
    (DomainError, EXIT_USAGE),
    (StructureError, EXIT_USAGE),
    (DeBruijnBalanceError, EXIT_USAGE),
]


def exit_code_for(error: Exception) -> int:
    """Map a library exception onto a CLI exit code."""
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_USAGE
