"""
deBruijn graphs B(n, d), general sink-free digraphs, and doubly weighted walk/cycle weights.

Vertices are the integers 0..N-1. A deBruijn vertex m is read as a d-digit base-n word and
``successor(m, l)`` drops the leading digit and appends ``l``. Weights are exact ``Fraction``s.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from ..utils.constants import DEFAULT_VERTEX_CAP
from ..utils.exceptions import CapacityError, DomainError, SinkError, StructureError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeWeights = Mapping[Edge, Fraction]
Cycle = Tuple[int, ...]


@dataclass(frozen=True)
class DeBruijnGraph:
    """The deBruijn graph on ``n`` symbols with words of length ``d``."""

    n: int
    d: int

    @property
    def N(self) -> int:
        return self.n**self.d

    @property
    def vertex_count(self) -> int:
        return self.N

    @property
    def vertices(self) -> range:
        return range(self.N)

    def check_vertex(self, m: int) -> None:
        if not 0 <= m < self.N:
            raise DomainError(f"vertex {m} outside 0..{self.N - 1}")

    def successor(self, m: int, digit: int) -> int:
        """Return m|digit."""
        self.check_vertex(m)
        if not 0 <= digit < self.n:
            raise DomainError(f"digit {digit} outside 0..{self.n - 1}")
        return (m % self.n ** (self.d - 1)) * self.n + digit

    def successors(self, m: int) -> List[int]:
        self.check_vertex(m)
        base = (m % self.n ** (self.d - 1)) * self.n
        return [base + digit for digit in range(self.n)]

    def predecessors(self, m: int) -> List[int]:
        self.check_vertex(m)
        tail = m // self.n
        high = self.n ** (self.d - 1)
        return [lead * high + tail for lead in range(self.n)]

    def out_degree(self, m: int) -> int:
        self.check_vertex(m)
        return self.n

    def has_edge(self, u: int, w: int) -> bool:
        if not (0 <= u < self.N and 0 <= w < self.N):
            return False
        return w // self.n == u % self.n ** (self.d - 1)

    def edges(self) -> List[Edge]:
        """All n^(d+1) edges sorted by (src, dst)."""
        return [(m, w) for m in self.vertices for w in self.successors(m)]

    def label(self, m: int) -> str:
        """The d-digit n-ary word of vertex m."""
        self.check_vertex(m)
        digits = []
        for _ in range(self.d):
            m, digit = divmod(m, self.n)
            digits.append(digit)
        digits.reverse()
        if self.n <= 10:
            return "".join(str(digit) for digit in digits)
        return ".".join(str(digit) for digit in digits)

    def parse_label(self, word: str) -> int:
        parts = list(word) if self.n <= 10 and "." not in word else word.split(".")
        if len(parts) != self.d:
            raise DomainError(f"word {word!r} does not have {self.d} digits")
        m = 0
        for part in parts:
            if not part.isdigit() or int(part) >= self.n:
                raise DomainError(f"invalid digit {part!r} in word {word!r}")
            m = m * self.n + int(part)
        return m

    def to_digraph(self) -> "Digraph":
        return Digraph(self.N, tuple(tuple(self.successors(m)) for m in self.vertices))


def build_debruijn(n: int, d: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> DeBruijnGraph:
    """Construct B(n, d)."""
    if n < 2:
        raise DomainError(f"symbol count n must be at least 2, got {n}")
    if d < 1:
        raise DomainError(f"word length d must be at least 1, got {d}")
    count = 1
    for _ in range(d):
        count *= n
        if count > vertex_cap:
            raise CapacityError(f"B({n},{d}) has more than {vertex_cap} vertices")
    logger.debug("built deBruijn graph B(%d,%d) with %d vertices", n, d, n**d)
    return DeBruijnGraph(n, d)


def successor(g: DeBruijnGraph, m: int, digit: int) -> int:
    return g.successor(m, digit)


@dataclass(frozen=True)
class Digraph:
    """A directed graph without multi-edges; successor lists are ascending and duplicate-free."""

    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise StructureError("a digraph needs at least one vertex")
        if len(self.adjacency) != self.vertex_count:
            raise StructureError("adjacency must list successors for every vertex")
        for v, succ in enumerate(self.adjacency):
            if list(succ) != sorted(set(succ)):
                raise StructureError(f"successors of vertex {v} are not ascending and duplicate-free")
            for w in succ:
                if not 0 <= w < self.vertex_count:
                    raise StructureError(f"edge {v}->{w} leaves the vertex range")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Digraph":
        succ: List[set] = [set() for _ in range(vertex_count)]
        for u, w in edges:
            if not (0 <= u < vertex_count and 0 <= w < vertex_count):
                raise StructureError(f"edge {u}->{w} leaves the vertex range 0..{vertex_count - 1}")
            succ[u].add(w)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in succ))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise DomainError(f"vertex {v} outside 0..{self.vertex_count - 1}")

    def successors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def out_degree(self, v: int) -> int:
        return len(self.successors(v))

    def has_edge(self, u: int, w: int) -> bool:
        return 0 <= u < self.vertex_count and w in self.adjacency[u]

    def edges(self) -> List[Edge]:
        return [(u, w) for u in self.vertices for w in self.adjacency[u]]

    def sinks(self) -> List[int]:
        return [v for v in self.vertices if not self.adjacency[v]]

    def require_sink_free(self) -> "Digraph":
        sinks = self.sinks()
        if sinks:
            raise SinkError(sinks[0])
        return self

    def out_regularity(self) -> Optional[int]:
        """The common out-degree, or None when out-degrees differ."""
        degrees = {len(succ) for succ in self.adjacency}
        return degrees.pop() if len(degrees) == 1 else None

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph


AnyGraph = Union[DeBruijnGraph, Digraph]


def as_digraph(g: AnyGraph) -> Digraph:
    return g.to_digraph() if isinstance(g, DeBruijnGraph) else g


def identify_debruijn(g: Digraph) -> Optional[DeBruijnGraph]:
    """Return B(n, d) if ``g`` is exactly that graph, otherwise None."""
    count = g.vertex_count
    n = 2
    while n <= count:
        power, d = n, 1
        while power < count:
            power *= n
            d += 1
        if power == count:
            candidate = DeBruijnGraph(n, d)
            if all(tuple(candidate.successors(m)) == g.adjacency[m] for m in candidate.vertices):
                return candidate
        n += 1
    return None


@dataclass(frozen=True)
class VertexWeights:
    """The vertex cost function c, one exact rational per vertex."""

    weights: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Union[int, str, Fraction]]) -> "VertexWeights":
        return cls(tuple(Fraction(value) for value in values))

    @classmethod
    def constant(cls, vertex_count: int, value: Union[int, Fraction]) -> "VertexWeights":
        return cls(tuple(Fraction(value) for _ in range(vertex_count)))

    def __getitem__(self, m: int) -> Fraction:
        return self.weights[m]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.weights)

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def mean(self) -> Fraction:
        return self.total() / len(self.weights)

    def shifted(self, kappa: Union[int, Fraction]) -> "VertexWeights":
        return VertexWeights(tuple(w + kappa for w in self.weights))

    def check_for(self, g: AnyGraph) -> "VertexWeights":
        if len(self.weights) != g.vertex_count:
            raise DomainError(f"{len(self.weights)} vertex weights given for {g.vertex_count} vertices")
        return self


def _edge_weight(f: EdgeWeights, u: int, w: int) -> Fraction:
    try:
        return Fraction(f[(u, w)])
    except KeyError:
        raise StructureError(f"no edge weight for {u}->{w}")


def walk_weight(g: AnyGraph, c: VertexWeights, f: EdgeWeights, walk: Sequence[int]) -> Fraction:
    """Vertex weights at all k+1 positions plus edge weights of the k steps."""
    if not walk:
        raise StructureError("a walk needs at least one vertex")
    total = Fraction(0)
    for i, v in enumerate(walk):
        if not 0 <= v < g.vertex_count:
            raise StructureError(f"vertex {v} is not in the graph")
        total += c[v]
        if i > 0:
            u = walk[i - 1]
            if not g.has_edge(u, v):
                raise StructureError(f"{u}->{v} is not an edge")
            total += _edge_weight(f, u, v)
    return total


def cycle_vertices(cyc: Sequence[int]) -> Cycle:
    """Accept [v0..vk-1] or the closed form [v0..vk-1, v0]; return the open vertex tuple."""
    vertices = tuple(cyc)
    if len(vertices) >= 2 and vertices[0] == vertices[-1]:
        vertices = vertices[:-1]
    return vertices


def canonical_cycle(cyc: Sequence[int]) -> Cycle:
    """Rotate so the smallest vertex comes first."""
    vertices = cycle_vertices(cyc)
    if not vertices:
        raise StructureError("empty cycle")
    start = vertices.index(min(vertices))
    return vertices[start:] + vertices[:start]


def check_simple_cycle(g: AnyGraph, cyc: Sequence[int]) -> Cycle:
    vertices = cycle_vertices(cyc)
    if not vertices:
        raise StructureError("empty cycle")
    if len(set(vertices)) != len(vertices):
        raise StructureError(f"cycle {list(cyc)} repeats a vertex")
    for i, u in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        if not g.has_edge(u, w):
            raise StructureError(f"{u}->{w} is not an edge")
    return vertices


def cycle_edges(cyc: Sequence[int]) -> List[Edge]:
    vertices = cycle_vertices(cyc)
    return [(u, vertices[(i + 1) % len(vertices)]) for i, u in enumerate(vertices)]


def cycle_weight(g: AnyGraph, c: VertexWeights, f: EdgeWeights, cyc: Sequence[int]) -> Fraction:
    """Each distinct vertex and each edge of a simple cycle counted once."""
    vertices = check_simple_cycle(g, cyc)
    total = sum((c[v] for v in vertices), Fraction(0))
    return total + sum((_edge_weight(f, u, w) for u, w in cycle_edges(vertices)), Fraction(0))


def cycle_mean(g: AnyGraph, c: VertexWeights, f: EdgeWeights, cyc: Sequence[int]) -> Fraction:
    return cycle_weight(g, c, f, cyc) / len(cycle_vertices(cyc))


def closed_walk_mean(g: AnyGraph, c: VertexWeights, f: EdgeWeights, walk: Sequence[int]) -> Fraction:
    """Mean of a closed walk v0..vk (v0 == vk), counting every traversal step once."""
    if len(walk) < 2 or walk[0] != walk[-1]:
        raise StructureError("a closed walk must start and end at the same vertex")
    steps = len(walk) - 1
    return (walk_weight(g, c, f, walk) - c[walk[-1]]) / steps
