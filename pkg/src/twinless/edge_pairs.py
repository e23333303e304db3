"""Edge-edge cut-pairs of a 2-edge-connected graph.

``count(e)`` is the number of edges ``f`` such that removing ``e`` and ``f``
disconnects the graph.  Two back-edges never form a cut-pair, so every pair
is either a back-edge with a tree edge or two tree edges:

* back-edge + ``(u, p(u))``: iff exactly one back-edge leaves ``T(u)``
  above ``u``; that edge is ``(M(u), low(u))``.
* ``(u, p(u))`` + ``(v, p(v))`` with ``v`` above ``u``: iff
  ``M(u) == M(v)`` and ``high(u) < v``.  The relation is transitive, so
  each list ``M^-1(m)`` splits into consecutive groups of mutual partners.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._util import gc_paused
from .dfs import DfsStructure, InverseLists, annotate, build_inverse_lists, run_dfs
from .graph import GraphError, UnGraph

__all__ = [
    "NotTwoEdgeConnectedError",
    "EdgeCutPairReport",
    "check_two_edge_connected",
    "count_backedge_tree_pairs",
    "count_tree_tree_pairs",
    "count_all_edges",
    "query_cut_edges_for_edge",
    "format_edge_report",
]


class NotTwoEdgeConnectedError(GraphError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


def check_two_edge_connected(g: UnGraph, d: DfsStructure) -> None:
    """Raise on the first bridge found (connectivity is checked by the DFS)."""
    low = d.low
    for v in range(1, d.n):
        if low[v] == v:
            e = d.tree_edge[v]
            raise NotTwoEdgeConnectedError(f"bridge {g.edges[e][0]} {g.edges[e][1]}", e)


def count_backedge_tree_pairs(d: DfsStructure, count: list[int], b_cut: dict[int, list[int]]) -> None:
    """Add back-edge/tree-edge pairs to ``count`` (indexed by edge id).

    Every u != r with a single back-edge leaving T(u) above u pairs its tree
    edge with ``(M(u), low(u))``; u is filed under ``b_cut[M(u)]``.
    """
    bc = d.b_count
    M = d.M
    low = d.low
    tree_edge = d.tree_edge
    edge_of = _back_edge_lookup(d)
    for u in range(1, d.n):
        if bc[u] == 1:
            count[tree_edge[u]] += 1
            count[edge_of[(M[u], low[u])]] += 1
            b_cut.setdefault(M[u], []).append(u)


def count_tree_tree_pairs(
    d: DfsStructure, inv: InverseLists, count: list[int], max_of: list
) -> None:
    """Add tree-edge/tree-edge pairs to ``count``.

    Walks each decreasing list ``M^-1(m)`` in groups: a group starts at u and
    runs while the next element is above high(u).  Every member gains
    (group size - 1) partners, and ``max_of[w]`` records the group's first
    (deepest) member for queries.
    """
    high = d.high
    tree_edge = d.tree_edge
    lst = inv.M_flat
    start = inv.M_start
    for m in range(d.n):
        i = start[m]
        k = start[m + 1]
        while i < k:
            u = lst[i]
            h = high[u]
            j = i + 1
            while j < k and h < lst[j]:
                j += 1
            n_edges = j - i - 1
            for w in lst[i:j]:
                if n_edges:
                    count[tree_edge[w]] += n_edges
                max_of[w] = u
            i = j


@dataclass(eq=False)
class EdgeCutPairReport:
    graph: UnGraph
    dfs: DfsStructure
    inverse: InverseLists
    count: list[int]  # by edge id
    b_cut: dict[int, list[int]]  # preorder v -> preorder u, only non-empty lists
    max_of: list  # preorder u -> deepest member of u's tree-edge group
    back_id: dict[tuple[int, int], int]  # (preorder src, preorder dst) -> edge id

    def to_rows(self) -> list[tuple[int, int, int]]:
        return [(a, b, self.count[e]) for e, (a, b) in enumerate(self.graph.edges)]


def count_all_edges(g: UnGraph, root: int = 0) -> EdgeCutPairReport:
    """count(e) for every edge of a 2-edge-connected graph."""
    with gc_paused():
        d = run_dfs(g, root)
        check_two_edge_connected(g, d)
        annotate(d, parent_labels=False)
        inv = build_inverse_lists(d)
        count = [0] * g.m
        b_cut: dict[int, list[int]] = {}
        max_of: list = [None] * d.n
        count_backedge_tree_pairs(d, count, b_cut)
        count_tree_tree_pairs(d, inv, count, max_of)
    return EdgeCutPairReport(g, d, inv, count, b_cut, max_of, _back_edge_lookup(d))


def query_cut_edges_for_edge(report: EdgeCutPairReport, e: int) -> set[int]:
    """Edge ids forming a cut-pair with edge ``e``."""
    g = report.graph
    if not 0 <= e < g.m:
        raise GraphError(f"unknown edge {e}")
    d = report.dfs
    a, b = g.edges[e]
    x, y = d.number[a], d.number[b]
    if x < y:
        x, y = y, x
    tree_edge = d.tree_edge
    out: set[int] = set()
    if d.parent[x] == y and tree_edge[x] == e:
        u = x
        if d.b_count[u] == 1:
            out.add(report.back_id[(d.M[u], d.low[u])])
        inv = report.inverse
        top = report.max_of[u]
        lst = inv.M_flat
        end = inv.M_start[d.M[u] + 1]
        h = d.high[top]
        i = inv.M_pos[top]
        # the group ends at the first element at or below high(top)
        while i < end and lst[i] > h:
            if lst[i] != u:
                out.add(tree_edge[lst[i]])
            i += 1
    elif y == d.low[x]:
        out.update(tree_edge[u] for u in report.b_cut.get(x, ()))
    return out


def _back_edge_lookup(d: DfsStructure) -> dict[tuple[int, int], int]:
    return {(s, t): e for s, t, e in d.back_edges()}


def format_edge_report(report: EdgeCutPairReport) -> str:
    return "".join(f"{a}\t{b}\t{c}\n" for a, b, c in report.to_rows())
