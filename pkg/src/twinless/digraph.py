"""Strongly connected components, strong bridges and strong articulation
points.

Both strong-item sets come from dominator trees of the flow graphs rooted at
vertex 0 in ``G`` and in its reversal:

* ``v != 0`` is a strong articulation point iff it dominates some vertex in
  one of the two flow graphs; vertex 0 itself is checked directly.
* ``(x, y)`` is a strong bridge iff, in one of the two flow graphs,
  ``idom(y) == x`` and ``y`` dominates every other predecessor of ``y``.

``method="brute"`` switches to deletion plus recount.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracles
from .graph import Digraph, GraphError

__all__ = [
    "NotStronglyConnectedError",
    "StrongConnectivityReport",
    "sccs",
    "is_strongly_connected",
    "dominators",
    "strong_articulation_points",
    "strong_bridges",
    "analyze",
]

METHODS = ("dominator", "brute")


class NotStronglyConnectedError(GraphError):
    def __init__(self, vertex: int):
        self.witness = vertex
        super().__init__(f"digraph is not strongly connected: vertex {vertex} is not mutually reachable with vertex 0")


def sccs(g: Digraph) -> list[list[int]]:
    """Iterative Tarjan.  Components sorted internally and by smallest vertex."""
    n = g.n
    out_adj = g.out_adj
    heads = [b for _, b in g.edges]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    t = 0
    for s in range(n):
        if index[s] != -1:
            continue
        index[s] = low[s] = t
        t += 1
        stack.append(s)
        on_stack[s] = True
        call = [(s, 0)]
        while call:
            v, i = call[-1]
            if i < len(out_adj[v]):
                call[-1] = (v, i + 1)
                w = heads[out_adj[v][i]]
                if index[w] == -1:
                    index[w] = low[w] = t
                    t += 1
                    stack.append(w)
                    on_stack[w] = True
                    call.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            call.pop()
            if call:
                u = call[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.sort()
    return comps


def _reach(n: int, adj: list[list[int]], s: int) -> list[bool]:
    seen = [False] * n
    seen[s] = True
    stack = [s]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return seen


def _succ(g: Digraph) -> list[list[int]]:
    return [[g.edges[e][1] for e in es] for es in g.out_adj]


def _pred(g: Digraph) -> list[list[int]]:
    return [[g.edges[e][0] for e in es] for es in g.in_adj]


def _unreached(g: Digraph) -> int | None:
    """A vertex not mutually reachable with 0, or None."""
    if g.n <= 1:
        return None
    for adj in (_succ(g), _pred(g)):
        seen = _reach(g.n, adj, 0)
        for v in range(g.n):
            if not seen[v]:
                return v
    return None


def is_strongly_connected(g: Digraph) -> bool:
    return _unreached(g) is None


def dominators(n: int, succ: list[list[int]], pred: list[list[int]], s: int) -> list:
    """Immediate dominators of the flow graph rooted at ``s``.

    Lengauer-Tarjan with path compression (the "simple" variant).
    ``idom[s]`` and ``idom`` of unreachable vertices are None.
    """
    # DFS numbering; vertex[i] is the vertex with number i
    num = [-1] * n
    vertex: list[int] = []
    parent = [-1] * n
    pos = [0] * n
    num[s] = 0
    vertex.append(s)
    stack = [s]
    while stack:
        v = stack[-1]
        if pos[v] < len(succ[v]):
            w = succ[v][pos[v]]
            pos[v] += 1
            if num[w] == -1:
                num[w] = len(vertex)
                vertex.append(w)
                parent[num[w]] = num[v]
                stack.append(w)
        else:
            stack.pop()
    k = len(vertex)
    semi = list(range(k))
    label = list(range(k))
    ancestor = [-1] * k
    idom = [0] * k
    bucket: list[list[int]] = [[] for _ in range(k)]

    def evaluate(v: int) -> int:
        if ancestor[v] == -1:
            return v
        # collect the path to the forest root, then compress top-down
        path = []
        x = v
        while ancestor[ancestor[x]] != -1:
            path.append(x)
            x = ancestor[x]
        for x in reversed(path):
            a = ancestor[x]
            if semi[label[a]] < semi[label[x]]:
                label[x] = label[a]
            ancestor[x] = ancestor[a]
        return label[v]

    for w in range(k - 1, 0, -1):
        for pv in pred[vertex[w]]:
            v = num[pv]
            if v == -1:
                continue
            u = evaluate(v)
            if semi[u] < semi[w]:
                semi[w] = semi[u]
        bucket[semi[w]].append(w)
        p = parent[w]
        ancestor[w] = p
        for v in bucket[p]:
            u = evaluate(v)
            idom[v] = u if semi[u] < semi[v] else p
        bucket[p].clear()
    for w in range(1, k):
        if idom[w] != semi[w]:
            idom[w] = idom[idom[w]]
    out: list = [None] * n
    for w in range(1, k):
        out[vertex[w]] = vertex[idom[w]]
    return out


def _dom_intervals(n: int, idom: list, s: int) -> tuple[list[int], list[int]]:
    kids: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if idom[v] is not None:
            kids[idom[v]].append(v)
    tin = [0] * n
    tout = [0] * n
    t = 0
    stack = [(s, 0)]
    tin[s] = t
    t += 1
    while stack:
        v, i = stack[-1]
        if i < len(kids[v]):
            stack[-1] = (v, i + 1)
            w = kids[v][i]
            tin[w] = t
            t += 1
            stack.append((w, 0))
        else:
            tout[v] = t
            stack.pop()
    return tin, tout


def _flow_items(g: Digraph, reverse: bool) -> tuple[set[int], set[int]]:
    """Non-trivial dominators and flow-graph bridges rooted at 0."""
    succ, pred = _succ(g), _pred(g)
    if reverse:
        succ, pred = pred, succ
    idom = dominators(g.n, succ, pred, 0)
    aps = {x for x in idom if x is not None and x != 0}
    tin, tout = _dom_intervals(g.n, idom, 0)
    bridges = set()
    for eid, (a, b) in enumerate(g.edges):
        x, y = (b, a) if reverse else (a, b)
        if idom[y] != x:
            continue
        # y must dominate every other predecessor
        if all(w == x or tin[y] <= tin[w] < tout[y] for w in pred[y]):
            bridges.add(eid)
    return aps, bridges


def _require_sc(g: Digraph) -> None:
    v = _unreached(g)
    if v is not None:
        raise NotStronglyConnectedError(v)


def _dominator_items(g: Digraph) -> tuple[set[int], set[int]]:
    if g.n <= 1:
        return set(), set()
    aps, bridges = _flow_items(g, False)
    raps, rbridges = _flow_items(g, True)
    aps |= raps
    bridges |= rbridges
    sub = Digraph(g.n - 1, [(a - 1, b - 1) for a, b in g.edges if a and b])
    if _unreached(sub) is not None:
        aps.add(0)
    return aps, bridges


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")


def strong_articulation_points(g: Digraph, method: str = "dominator") -> set[int]:
    _check_method(method)
    _require_sc(g)
    if method == "brute":
        return oracles.oracle_strong_articulation_points(g)
    return _dominator_items(g)[0]


def strong_bridges(g: Digraph, method: str = "dominator") -> set[int]:
    _check_method(method)
    _require_sc(g)
    if method == "brute":
        return oracles.oracle_strong_bridges(g)
    return _dominator_items(g)[1]


@dataclass(frozen=True)
class StrongConnectivityReport:
    sccs: list[list[int]]
    strong_bridges: frozenset[int]
    strong_articulation_points: frozenset[int]


def analyze(g: Digraph, method: str = "dominator") -> StrongConnectivityReport:
    """SCCs plus strong bridges/articulation points of a strongly connected digraph."""
    _check_method(method)
    _require_sc(g)
    if method == "brute":
        aps = oracles.oracle_strong_articulation_points(g)
        bridges = oracles.oracle_strong_bridges(g)
    else:
        aps, bridges = _dominator_items(g)
    return StrongConnectivityReport(sccs(g), frozenset(bridges), frozenset(aps))
