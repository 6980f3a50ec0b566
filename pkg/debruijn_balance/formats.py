"""
Plain-text formats for graphs, vertex weights, edge weights, value tables and reports.

Every format is UTF-8 with LF line endings. Blank lines and lines starting with ``#`` are
ignored on input; output is always sorted so identical inputs give identical bytes.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .core.balance import EdgeWeightAssignment
from .core.graph import AnyGraph, Digraph, Edge, VertexWeights
from .utils.exceptions import ParseError
from .utils.rationals import format_rational, parse_rational


def _data_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line)


def _vertex(token: str, line: int, vertex_count: int) -> int:
    v = _parse_int(token, line, "vertex id")
    if not 0 <= v < vertex_count:
        raise ParseError(f"vertex {v} outside 0..{vertex_count - 1}", line)
    return v


def parse_digraph(text: str) -> Digraph:
    """Edge-list format: the vertex count, then one ``src dst`` pair per line."""
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing vertex count")
    number, tokens = header
    if len(tokens) != 1:
        raise ParseError("first line must hold only the vertex count", number)
    vertex_count = _parse_int(tokens[0], number, "vertex count")
    if vertex_count < 1:
        raise ParseError(f"vertex count must be positive, got {vertex_count}", number)

    seen = set()
    for number, tokens in lines:
        if len(tokens) != 2:
            raise ParseError(f"expected 'src dst', got {' '.join(tokens)!r}", number)
        edge = (_vertex(tokens[0], number, vertex_count), _vertex(tokens[1], number, vertex_count))
        if edge in seen:
            raise ParseError(f"duplicate edge {edge[0]} {edge[1]}", number)
        seen.add(edge)
    return Digraph.from_edges(vertex_count, seen).require_sink_free()


def serialize_digraph(g: AnyGraph) -> str:
    lines = [str(g.vertex_count)] + [f"{u} {w}" for u, w in g.edges()]
    return "\n".join(lines) + "\n"


def parse_vertex_weights(text: str, vertex_count: int) -> VertexWeights:
    """Lines ``vertex_id numerator[/denominator]``; every vertex exactly once."""
    weights: Dict[int, Fraction] = {}
    for number, tokens in _data_lines(text):
        if len(tokens) != 2:
            raise ParseError(f"expected 'vertex weight', got {' '.join(tokens)!r}", number)
        v = _vertex(tokens[0], number, vertex_count)
        if v in weights:
            raise ParseError(f"vertex {v} given twice", number)
        weights[v] = parse_rational(tokens[1], number)
    missing = [v for v in range(vertex_count) if v not in weights]
    if missing:
        raise ParseError(f"no weight for vertex {missing[0]}")
    return VertexWeights(tuple(weights[v] for v in range(vertex_count)))


def serialize_vertex_weights(c: VertexWeights) -> str:
    return "".join(f"{v} {format_rational(w)}\n" for v, w in enumerate(c))


def parse_edge_weights(text: str, g: Optional[AnyGraph] = None) -> EdgeWeightAssignment:
    """Lines ``src dst numerator[/denominator]``; with ``g`` every edge of g exactly once."""
    weights: Dict[Edge, Fraction] = {}
    for number, tokens in _data_lines(text):
        if len(tokens) != 3:
            raise ParseError(f"expected 'src dst weight', got {' '.join(tokens)!r}", number)
        edge = (_parse_int(tokens[0], number, "vertex id"), _parse_int(tokens[1], number, "vertex id"))
        if g is not None and not g.has_edge(*edge):
            raise ParseError(f"{edge[0]} {edge[1]} is not an edge of the graph", number)
        if edge in weights:
            raise ParseError(f"duplicate edge {edge[0]} {edge[1]}", number)
        weights[edge] = parse_rational(tokens[2], number)
    if g is not None:
        missing = [edge for edge in g.edges() if edge not in weights]
        if missing:
            raise ParseError(f"no weight for edge {missing[0][0]} {missing[0][1]}")
    return EdgeWeightAssignment(weights)


def serialize_edge_weights(f: EdgeWeightAssignment, decimal: Optional[int] = None) -> str:
    return "".join(f"{u} {w} {format_rational(value, decimal)}\n" for (u, w), value in f.items())


def serialize_value_rows(rows: Iterable[Tuple[int, int, Fraction]], decimal: Optional[int] = None) -> str:
    return "".join(f"{t} {m} {format_rational(value, decimal)}\n" for t, m, value in rows)


def table_rows(slices: Sequence[Sequence[Fraction]]) -> List[Tuple[int, int, Fraction]]:
    return [(t, m, value) for t, values in enumerate(slices) for m, value in enumerate(values)]


def key_value_block(lines: Iterable[str]) -> str:
    return "".join(f"{line}\n" for line in lines)
