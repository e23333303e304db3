"""Index-based directed and undirected graphs, derived views and text I/O.

Vertices are dense integers ``0..n-1``; edges are identified by their
position in the edge sequence.  Graphs are never mutated after
construction: every derived view returns a fresh graph together with the
tables needed to map ids back to the source graph.

Text format::

    # comment
    p u 3 3
    0 1
    1 2
    2 0

``p d`` declares a digraph, ``p u`` an undirected graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "GraphError",
    "ParseError",
    "Digraph",
    "UnGraph",
    "Subgraph",
    "underlying",
    "induced",
    "delete",
    "parse",
    "serialize",
    "read_graph",
]


class GraphError(ValueError):
    """Invalid graph construction or an id that does not exist."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class _Graph:
    directed: bool

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple((int(a), int(b)) for a, b in edges)
        seen: dict[tuple[int, int], int] = {}
        for eid, (a, b) in enumerate(self.edges):
            _check_edge(n, a, b, eid)
            key = (a, b) if self.directed else (min(a, b), max(a, b))
            if key in seen:
                raise GraphError(f"duplicate edge {a} {b} (edges {seen[key]} and {eid})")
            seen[key] = eid
        self._index = seen

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is type(self)
            and self.n == other.n  # type: ignore[attr-defined]
            and self.edges == other.edges  # type: ignore[attr-defined]
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


def _check_edge(n: int, a: int, b: int, eid: int) -> None:
    if not (0 <= a < n and 0 <= b < n):
        raise GraphError(f"edge {eid} ({a}, {b}) has an endpoint outside 0..{n - 1}")
    if a == b:
        raise GraphError(f"edge {eid} is a self-loop at {a}")


class Digraph(_Graph):
    """Directed graph without self-loops or duplicate arcs.

    ``out_adj[v]`` and ``in_adj[v]`` list edge ids in insertion order.
    """

    directed = True

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        super().__init__(n, edges)
        self.out_adj: list[list[int]] = [[] for _ in range(n)]
        self.in_adj: list[list[int]] = [[] for _ in range(n)]
        for eid, (a, b) in enumerate(self.edges):
            self.out_adj[a].append(eid)
            self.in_adj[b].append(eid)

    def edge_id(self, tail: int, head: int) -> int | None:
        return self._index.get((tail, head))

    def has_twin(self, eid: int) -> bool:
        a, b = self.edges[eid]
        return (b, a) in self._index

    def reverse(self) -> "Digraph":
        """Same edge ids, every arc flipped."""
        return Digraph(self.n, [(b, a) for a, b in self.edges])


class UnGraph(_Graph):
    """Simple undirected graph; ``adj[v]`` lists incident edge ids."""

    directed = False

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        super().__init__(n, edges)
        self.adj: list[list[int]] = [[] for _ in range(n)]
        for eid, (a, b) in enumerate(self.edges):
            self.adj[a].append(eid)
            self.adj[b].append(eid)

    def edge_id(self, a: int, b: int) -> int | None:
        return self._index.get((min(a, b), max(a, b)))

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def degree(self, v: int) -> int:
        return len(self.adj[v])


AnyGraph = Union[Digraph, UnGraph]


@dataclass(frozen=True)
class Subgraph:
    """A derived graph plus id translation back to its source.

    ``vertices[i]`` is the source id of new vertex ``i``; ``edges[j]`` the
    source id of new edge ``j``.  ``vertex_index`` is the inverse map.
    """

    graph: AnyGraph
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def vertex_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def underlying(g: Digraph) -> tuple[UnGraph, list[list[int]]]:
    """Collapse twin arcs into the associated undirected graph.

    Returns the graph and, per undirected edge, the ids of its one or two
    source arcs.  Undirected edges appear in order of their first source arc.
    """
    pairs: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    sources: list[list[int]] = []
    for eid, (a, b) in enumerate(g.edges):
        key = (min(a, b), max(a, b))
        k = pairs.get(key)
        if k is None:
            pairs[key] = len(edges)
            edges.append((a, b))
            sources.append([eid])
        else:
            sources[k].append(eid)
    return UnGraph(g.n, edges), sources


def induced(g: AnyGraph, vertices: Iterable[int]) -> Subgraph:
    """Subgraph on ``vertices`` keeping every edge with both ends inside.

    New ids follow ascending source ids, so ``induced(g, range(g.n))`` is
    the identity.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex {v}")
    index = {v: i for i, v in enumerate(keep)}
    new_edges = []
    kept = []
    for eid, (a, b) in enumerate(g.edges):
        if a in index and b in index:
            new_edges.append((index[a], index[b]))
            kept.append(eid)
    return Subgraph(type(g)(len(keep), new_edges), tuple(keep), tuple(kept))


def delete(g: AnyGraph, vertices: Iterable[int] = (), edges: Iterable[int] = ()) -> Subgraph:
    """Remove vertices (with their incident edges) and edges."""
    dead_v = set(vertices)
    dead_e = set(edges)
    for v in dead_v:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex {v}")
    for e in dead_e:
        if not 0 <= e < g.m:
            raise GraphError(f"unknown edge {e}")
    keep = [v for v in range(g.n) if v not in dead_v]
    index = {v: i for i, v in enumerate(keep)}
    new_edges = []
    kept = []
    for eid, (a, b) in enumerate(g.edges):
        if eid in dead_e or a in dead_v or b in dead_v:
            continue
        new_edges.append((index[a], index[b]))
        kept.append(eid)
    return Subgraph(type(g)(len(keep), new_edges), tuple(keep), tuple(kept))


def parse(text: str) -> AnyGraph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    n = m = 0
    directed = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 4 or fields[0] != "p" or fields[1] not in ("d", "u"):
                raise ParseError(f"expected header 'p <d|u> <n> <m>', got {line!r}", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"non-integer size in header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
            directed = fields[1] == "d"
            header = lineno
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"self-loop at {a}", lineno)
        key = (a, b) if directed else (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {a} {b} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((a, b))
    if header is None:
        raise ParseError("missing header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Digraph(n, edges) if directed else UnGraph(n, edges)


def serialize(g: AnyGraph) -> str:
    kind = "d" if g.directed else "u"
    lines = [f"p {kind} {g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> AnyGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
