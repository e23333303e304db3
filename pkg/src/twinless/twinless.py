"""Twinless strongly connected components and the items whose deletion
splits them.

A digraph is twinless strongly connected iff it is strongly connected and
its underlying undirected graph is 2-edge-connected.  For such a digraph:

* an edge ``(x, y)`` that is not a strong bridge is a twinless strong
  bridge iff ``(y, x)`` is absent and its undirected edge lies in some
  edge-edge cut-pair; the TSCC count after deleting it is ``count + 1``.
* a vertex that is not a strong articulation point is a twinless strong
  articulation point iff it lies in some vertex-edge cut-pair of its
  block of the underlying graph; the TSCC count after deleting it is
  ``count + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import digraph
from .edge_pairs import count_all_edges
from .graph import Digraph, GraphError, UnGraph, induced, underlying
from .undirected import block_forest, bridges_and_articulation_points, two_edge_connected_components
from .vertex_edge import count_all

__all__ = [
    "NotTwinlessStronglyConnectedError",
    "TwinlessReport",
    "is_twinless_strongly_connected",
    "tsccs",
    "twinless_strong_bridges",
    "twinless_strong_articulation_points",
    "tscc_count_after_vertex",
    "tscc_count_after_edge",
    "analyze",
]

STRONG = "strong"
TWINLESS_ONLY = "twinless_only"


class NotTwinlessStronglyConnectedError(GraphError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


def _violation(g: Digraph):
    """None, or (message, witness) for the first obstacle found."""
    v = digraph._unreached(g)
    if v is not None:
        return f"digraph is not strongly connected: vertex {v} is not mutually reachable with vertex 0", v
    u, sources = underlying(g)
    bridges, _ = bridges_and_articulation_points(u)
    if bridges:
        e = min(bridges)
        a, b = u.edges[e]
        return f"underlying graph has bridge {a} {b}", sources[e][0]
    return None


def is_twinless_strongly_connected(g: Digraph) -> bool:
    return _violation(g) is None


def _require_tsc(g: Digraph) -> None:
    bad = _violation(g)
    if bad is not None:
        raise NotTwinlessStronglyConnectedError(*bad)


def tsccs(g: Digraph) -> list[list[int]]:
    """SCCs split further by the 2-edge-connected components of each
    component's underlying graph.  Sorted like :func:`digraph.sccs`."""
    out = []
    for comp in digraph.sccs(g):
        if len(comp) == 1:
            out.append(comp)
            continue
        sub = induced(g, comp)
        u, _ = underlying(sub.graph)
        for cls in two_edge_connected_components(u):
            out.append(sorted(sub.vertices[x] for x in cls))
    out.sort()
    return out


@dataclass
class TwinlessReport:
    """Results for one twinless strongly connected digraph.

    Flags are ``"strong"`` (already a strong bridge / articulation point)
    or ``"twinless_only"``.  Post-deletion TSCC counts are given for the
    twinless-only items.
    """

    tsccs: list[list[int]]
    bridges: dict[int, str] = field(default_factory=dict)
    articulation_points: dict[int, str] = field(default_factory=dict)
    count_after_vertex: dict[int, int] = field(default_factory=dict)
    count_after_edge: dict[int, int] = field(default_factory=dict)

    def to_json(self, g: Digraph) -> dict:
        return {
            "tsccs": self.tsccs,
            "twinless_strong_bridges": [
                {
                    "edge": e,
                    "tail": g.edges[e][0],
                    "head": g.edges[e][1],
                    "flag": flag,
                    "tsccs_after": self.count_after_edge.get(e),
                }
                for e, flag in sorted(self.bridges.items())
            ],
            "twinless_strong_articulation_points": [
                {"vertex": v, "flag": flag, "tsccs_after": self.count_after_vertex.get(v)}
                for v, flag in sorted(self.articulation_points.items())
            ],
        }


def _edge_counts(g: Digraph) -> tuple[UnGraph, list[list[int]], list[int]]:
    u, sources = underlying(g)
    return u, sources, count_all_edges(u).count


def _block_counts(g: Digraph) -> tuple[dict[int, int], set[int]]:
    """count(v) inside v's block for every non-articulation vertex of the
    underlying graph, and the articulation points themselves."""
    u, _ = underlying(g)
    forest = block_forest(u)
    counts: dict[int, int] = {}
    for verts, eids in zip(forest.blocks, forest.block_edges):
        if len(verts) < 3:
            # a lone edge or vertex; impossible once the underlying graph is 2EC
            continue
        index = {v: i for i, v in enumerate(verts)}
        sub = UnGraph(len(verts), [(index[u.edges[e][0]], index[u.edges[e][1]]) for e in eids])
        rep = count_all(sub)
        for i, v in enumerate(verts):
            if v not in forest.articulation_points:
                counts[v] = rep.count[i]
    return counts, forest.articulation_points


def analyze(g: Digraph, method: str = "dominator") -> TwinlessReport:
    _require_tsc(g)
    strong = digraph.analyze(g, method)
    report = TwinlessReport(tsccs(g))
    _, sources, ecount = _edge_counts(g)
    for ue, srcs in enumerate(sources):
        for e in srcs:
            if e in strong.strong_bridges:
                report.bridges[e] = STRONG
            elif len(srcs) == 1 and ecount[ue] >= 1:
                report.bridges[e] = TWINLESS_ONLY
                report.count_after_edge[e] = ecount[ue] + 1
    vcount, _ = _block_counts(g)
    for v in range(g.n):
        if v in strong.strong_articulation_points:
            report.articulation_points[v] = STRONG
        elif vcount.get(v, 0) >= 1:
            report.articulation_points[v] = TWINLESS_ONLY
            report.count_after_vertex[v] = vcount[v] + 1
    report.bridges = dict(sorted(report.bridges.items()))
    return report


def twinless_strong_bridges(g: Digraph, method: str = "dominator") -> dict[int, str]:
    """Edge id -> flag, for every twinless strong bridge."""
    return analyze(g, method).bridges


def twinless_strong_articulation_points(g: Digraph, method: str = "dominator") -> dict[int, str]:
    """Vertex -> flag, for every twinless strong articulation point."""
    return analyze(g, method).articulation_points


def tscc_count_after_vertex(g: Digraph, v: int) -> int:
    """Number of TSCCs of ``g - v`` for a vertex that is not a strong
    articulation point."""
    if not 0 <= v < g.n:
        raise GraphError(f"unknown vertex {v}")
    _require_tsc(g)
    if v in digraph.strong_articulation_points(g):
        raise GraphError(f"vertex {v} is a strong articulation point")
    counts, _ = _block_counts(g)
    return counts[v] + 1


def tscc_count_after_edge(g: Digraph, e: int) -> int:
    """Number of TSCCs of ``g - e`` for an edge that is neither a strong
    bridge nor part of a twin pair."""
    if not 0 <= e < g.m:
        raise GraphError(f"unknown edge {e}")
    _require_tsc(g)
    if g.has_twin(e):
        raise GraphError(f"edge {e} has a twin")
    if e in digraph.strong_bridges(g):
        raise GraphError(f"edge {e} is a strong bridge")
    u, sources, ecount = _edge_counts(g)
    a, b = g.edges[e]
    return ecount[u.edge_id(a, b)] + 1
