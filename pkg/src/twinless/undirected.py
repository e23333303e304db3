"""Linear-time undirected connectivity: components, bridges, articulation
points, 2-edge-connected components and the block forest."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import UnGraph

__all__ = [
    "BlockForest",
    "components",
    "bridges_and_articulation_points",
    "two_edge_connected_components",
    "block_forest",
    "is_connected",
    "is_two_edge_connected",
    "is_biconnected",
]


@dataclass
class BlockForest:
    """Blocks (maximal 2-vertex-connected pieces) and articulation points.

    ``blocks[i]`` is a sorted vertex list, ``block_edges[i]`` the edge ids
    of block ``i``.  ``tree_edges`` joins block indices to articulation
    points; it is a forest with one tree per connected component.
    An isolated vertex forms a block on its own.
    """

    blocks: list[list[int]]
    block_edges: list[list[int]]
    articulation_points: set[int]
    tree_edges: list[tuple[int, int]] = field(default_factory=list)

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


@dataclass
class _Scan:
    bridges: set[int]
    articulation_points: set[int]
    blocks: list[list[int]]
    block_edges: list[list[int]]
    roots: list[int]


def _scan(g: UnGraph) -> _Scan:
    n = g.n
    adj = g.adj
    ends = g.edges
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    aps: set[int] = set()
    # (block start key, vertices, edges); key = discovery time of the first vertex entered
    found: list[tuple[int, list[int], list[int]]] = []
    roots = []
    t = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        roots.append(s)
        disc[s] = low[s] = t
        t += 1
        if not adj[s]:
            found.append((disc[s], [s], []))
            continue
        root_children = 0
        edge_stack: list[int] = []
        # frames: vertex, edge used to enter it, next adjacency position
        stack = [[s, -1, 0]]
        while stack:
            frame = stack[-1]
            v, pe, i = frame
            if i < len(adj[v]):
                frame[2] = i + 1
                e = adj[v][i]
                if e == pe:
                    continue
                a, b = ends[e]
                w = b if a == v else a
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    edge_stack.append(e)
                    stack.append([w, e, 0])
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] > disc[u]:
                bridges.add(pe)
            if low[v] >= disc[u]:
                if u == s:
                    root_children += 1
                else:
                    aps.add(u)
                es = []
                while True:
                    x = edge_stack.pop()
                    es.append(x)
                    if x == pe:
                        break
                vs = {u}
                for x in es:
                    vs.update(ends[x])
                found.append((disc[v], sorted(vs), sorted(es)))
        if root_children > 1:
            aps.add(s)
    found.sort(key=lambda item: item[0])
    return _Scan(
        bridges,
        aps,
        [b for _, b, _ in found],
        [e for _, _, e in found],
        roots,
    )


def components(g: UnGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = len(out)
        members = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for e in g.adj[v]:
                w = g.other(e, v)
                if comp[w] == -1:
                    comp[w] = comp[s]
                    members.append(w)
                    stack.append(w)
        out.append(sorted(members))
    return out


def is_connected(g: UnGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bridges_and_articulation_points(g: UnGraph) -> tuple[set[int], set[int]]:
    """Bridge edge ids and articulation point vertices."""
    scan = _scan(g)
    return scan.bridges, scan.articulation_points


def two_edge_connected_components(g: UnGraph) -> list[list[int]]:
    """Classes of the relation "joined by a path avoiding all bridges"."""
    bridges = _scan(g).bridges
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = len(out)
        members = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for e in g.adj[v]:
                if e in bridges:
                    continue
                w = g.other(e, v)
                if comp[w] == -1:
                    comp[w] = comp[s]
                    members.append(w)
                    stack.append(w)
        out.append(sorted(members))
    return out


def block_forest(g: UnGraph) -> BlockForest:
    scan = _scan(g)
    tree_edges = []
    for i, block in enumerate(scan.blocks):
        for v in block:
            if v in scan.articulation_points:
                tree_edges.append((i, v))
    return BlockForest(scan.blocks, scan.block_edges, scan.articulation_points, tree_edges)


def is_two_edge_connected(g: UnGraph) -> bool:
    return is_connected(g) and not _scan(g).bridges


def is_biconnected(g: UnGraph) -> bool:
    """At least three vertices, connected, no articulation point."""
    return g.n >= 3 and is_connected(g) and not _scan(g).articulation_points
