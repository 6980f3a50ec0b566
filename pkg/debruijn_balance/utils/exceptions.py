from typing import Optional


class DeBruijnBalanceError(Exception):
    """Base exception for debruijn-balance."""

    pass


class DomainError(DeBruijnBalanceError):
    """Raised when an argument lies outside its mathematical domain."""

    pass


class CapacityError(DeBruijnBalanceError):
    """Raised when a configured size cap would be exceeded."""

    pass


class StructureError(DeBruijnBalanceError):
    """Raised when a walk, cycle or graph does not have the required shape."""

    pass


class ParseError(DeBruijnBalanceError):
    """Raised when parsing a text format fails."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SinkError(StructureError):
    """Raised when a vertex has no outgoing edge."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has no outgoing edges")


class HorizonError(DomainError):
    """Raised when the game horizon is too short for the requested quantity."""

    pass


class RegularityError(StructureError):
    """Raised when a graph is expected to be out-regular but is not."""

    pass


class AssertionFailure(DeBruijnBalanceError):
    """Raised when two independently computed tables disagree."""

    pass
