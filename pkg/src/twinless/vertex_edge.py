"""Vertex-edge cut-pairs of a biconnected graph.

``count(v)`` is the number of edges ``e`` such that removing both ``v`` and
``e`` disconnects the graph.  Edges incident to ``v`` never count.  With a
DFS tree fixed, a partner edge of ``v`` is

* a back-edge (``"back"``),
* a tree edge ``(u, p(u))`` above ``v`` with ``M(u) == v`` (``"M_eq"``) or
  with ``M(u)`` strictly below ``v`` (``"M_desc"``),
* a tree edge ``(u, p(u))`` below ``v`` with ``high(u) == v``
  (``"high_eq"``) or ``high(u) < v`` (``"high_lt"``).

Each case has its own linear pass; the two "indirect" cases store anchors
so that :func:`query_cut_edges` lists partners in output-sensitive time.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Callable

from ._util import gc_paused
from .dfs import (
    DfsStructure,
    DisconnectedError,
    InverseLists,
    annotate,
    build_inverse_lists,
    run_dfs,
)
from .graph import GraphError, UnGraph

__all__ = [
    "CASES",
    "NotBiconnectedError",
    "PartnerLists",
    "QueryTables",
    "VertexCutPairReport",
    "check_biconnected",
    "count_backedge_pairs",
    "count_M_eq_v",
    "count_M_desc",
    "count_high_eq_v",
    "count_high_lt_v",
    "count_all",
    "compiled_available",
    "query_cut_edges",
    "format_report",
]

CASES = ("back", "M_eq", "M_desc", "high_eq", "high_lt")


class NotBiconnectedError(GraphError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


def check_biconnected(g: UnGraph, d: DfsStructure) -> None:
    """Raise unless ``g`` has >= 3 vertices and no articulation point.

    Uses the lowpoints of an existing DFS (connectivity is already
    enforced by :func:`run_dfs`).
    """
    if g.n < 3:
        raise NotBiconnectedError(f"graph has {g.n} vertices; at least 3 are needed", None)
    if len(d.children[0]) > 1:
        raise NotBiconnectedError(f"articulation point {d.order[0]}", d.order[0])
    low = d.low
    parent = d.parent
    for v in range(2, d.n):
        p = parent[v]
        if low[v] >= p:
            raise NotBiconnectedError(f"articulation point {d.order[p]}", d.order[p])


class PartnerLists:
    """Per-vertex partner lists stored flat, filled in increasing vertex order."""

    __slots__ = ("flat", "start")

    def __init__(self, n: int):
        self.flat: list[int] = []
        self.start = [0] * (n + 1)

    def get(self, v: int) -> list[int]:
        return self.flat[self.start[v] : self.start[v + 1]]


def count_backedge_pairs(d: DfsStructure, partner: list | None = None) -> list[int]:
    """Children c of v with exactly one back-edge leaving T(c) above v.

    That back-edge is ``(M_p(c), low(c))``; when ``partner`` is given,
    ``partner[c]`` receives its edge id.
    """
    n = d.n
    out = [0] * n
    bcp = d.b_count_p
    parent = d.parent
    edge_of = _back_edge_lookup(d) if partner is not None else None
    for c in range(1, n):
        if bcp[c] == 1:
            out[parent[c]] += 1
            if partner is not None:
                partner[c] = edge_of[(d.M_p[c], d.low[c])]
    return out


def count_M_eq_v(d: DfsStructure, inv: InverseLists, record: PartnerLists | None = None) -> list[int]:
    """Tree edges (u, p(u)) with u a proper ancestor of v and M(u) = v.

    ``u`` pairs with ``v`` unless it falls in some window
    ``[high_p(c), low(c))`` of a child ``c``.  Children are scanned by
    decreasing ``high_p``, merging overlapping windows.
    """
    n = d.n
    out = [0] * n
    high_p = d.high_p
    low = d.low
    us = inv.M_flat
    M_start = inv.M_start
    kids = inv.kids_flat
    kids_start = inv.kids_start
    flat = record.flat if record is not None else None
    rec_start = record.start if record is not None else [0] * (n + 1)
    for v in range(n):
        rec_start[v] = len(flat) if flat is not None else 0
        i = M_start[v] + 1  # M^-1(v) starts with v itself
        k = M_start[v + 1]
        if i >= k:
            continue
        j = kids_start[v]
        nk = kids_start[v + 1]
        bound = v
        cnt = 0
        while i < k and j < nk:
            bound = high_p[kids[j]]
            while i < k and us[i] > bound:
                cnt += 1
                if flat is not None:
                    flat.append(us[i])
                i += 1
            bound = low[kids[j]]
            j += 1
            while j < nk and high_p[kids[j]] >= bound:
                if low[kids[j]] < bound:
                    bound = low[kids[j]]
                j += 1
            while i < k and us[i] > bound:
                i += 1
        while i < k:
            if us[i] <= bound:
                cnt += 1
                if flat is not None:
                    flat.append(us[i])
            i += 1
        out[v] = cnt
    rec_start[n] = len(flat) if flat is not None else 0
    return out


def count_M_desc(d: DfsStructure, inv: InverseLists, anchor: list | None = None) -> list[int]:
    """Tree edges (u, p(u)) above v = p(c) with M(u) inside T(c).

    Such a u pairs with p(c) iff M(u) = M_p(c) and high_p(c) < u.  For each
    c, ``anchor[c]`` receives the lowest such u.
    """
    n = d.n
    out = [0] * n
    parent = d.parent
    high_p = d.high_p
    us = inv.M_flat
    M_start = inv.M_start
    cs = inv.Mp_flat
    Mp_start = inv.Mp_start
    for m in range(n):
        ci = Mp_start[m]
        nc = Mp_start[m + 1]
        ui = M_start[m]
        nu = M_start[m + 1]
        if ci == nc or ui == nu:
            continue
        while ci < nc and ui < nu:
            c = cs[ci]
            pc = parent[c]
            while ui < nu and us[ui] >= pc:
                ui += 1
            if ui == nu:
                break
            hp = high_p[c]
            if hp < us[ui]:
                first = ui
                while ui < nu and hp < us[ui]:
                    ui += 1
                n_edges = ui - first
                last = us[ui - 1]
                out[pc] += n_edges
                if anchor is not None:
                    anchor[c] = last
                ci += 1
                while ci < nc and parent[cs[ci]] > last:
                    c = cs[ci]
                    pc = parent[c]
                    # overrunning ``first`` means no candidate is left
                    while first < ui and us[first] >= pc:
                        n_edges -= 1
                        first += 1
                    out[pc] += n_edges
                    if anchor is not None and n_edges:
                        anchor[c] = last
                    ci += 1
            else:
                ci += 1
    return out


def count_high_eq_v(d: DfsStructure, inv: InverseLists, record: PartnerLists | None = None) -> list[int]:
    """Tree edges (u, p(u)) below v with high(u) = v.

    With c the child of v above u, the pair is a cut iff u != c and either
    low(u) = v or u <= M_p(c).
    """
    n = d.n
    out = [0] * n
    low = d.low
    size = d.size
    Mp = d.M_p
    children = d.children
    us = inv.high_flat
    high_start = inv.high_start
    flat = record.flat if record is not None else None
    rec_start = record.start if record is not None else [0] * (n + 1)
    for v in range(n):
        rec_start[v] = len(flat) if flat is not None else 0
        a = high_start[v]
        b = high_start[v + 1]
        if a == b:
            continue
        ch = children[v]
        j = 0
        cnt = 0
        for u in us[a:b]:
            c = ch[j]
            while not (c <= u < c + size[c]):
                j += 1
                c = ch[j]
            if u == c:
                continue
            if low[u] == v or (Mp[c] is not None and u <= Mp[c]):
                cnt += 1
                if flat is not None:
                    flat.append(u)
        out[v] = cnt
    rec_start[n] = len(flat) if flat is not None else 0
    return out


def count_high_lt_v(d: DfsStructure, inv: InverseLists, max_desc: list | None = None) -> list[int]:
    """Tree edges (u, p(u)) below v = p(c) with high(u) < v.

    Such a u (a proper descendant of c) pairs with p(c) iff
    M(u) = M_p(c).  ``max_desc[c]`` receives the greatest such u.
    """
    n = d.n
    out = [0] * n
    parent = d.parent
    high = d.high
    us = inv.M_flat
    M_start = inv.M_start
    cs = inv.Mp_flat
    Mp_start = inv.Mp_start
    for m in range(n):
        ci = Mp_start[m]
        nc = Mp_start[m + 1]
        ui = M_start[m]
        nu = M_start[m + 1]
        if ci == nc or ui == nu:
            continue
        while ui < nu and ci < nc:
            u = us[ui]
            while ci < nc and cs[ci] >= u:
                ci += 1
            if ci == nc:
                break
            if high[u] < parent[cs[ci]]:
                n_edges = 0
                h = high[u]
                top = u
                while ci < nc and h < parent[cs[ci]]:
                    c = cs[ci]
                    if max_desc is not None:
                        max_desc[c] = top
                    while ui < nu and c < us[ui]:
                        n_edges += 1
                        ui += 1
                    out[parent[c]] += n_edges
                    ci += 1
            else:
                ui += 1
    return out


def _back_edge_lookup(d: DfsStructure) -> dict[tuple[int, int], int]:
    return {(s, t): e for s, t, e in zip(d.back_src, d.back_dst, d.back_eid)}


@dataclass
class QueryTables:
    """DFS, inverse lists and anchors, indexed by preorder number."""

    dfs: DfsStructure
    inverse: InverseLists
    back_partner: list  # child c -> id of the single back-edge escaping T(c) above p(c)
    m_eq_partners: PartnerLists  # v -> u
    high_eq_partners: PartnerLists
    lowest_above: list  # c -> lowest u pairing with p(c) through M(u) in T(c)
    greatest_below: list  # c -> greatest u in T(c) pairing with p(c)


class VertexCutPairReport:
    """Per-vertex counts and case subtotals (input ids) plus query tables.

    The compiled engine converts its query tables to Python lists only when
    they are first needed.
    """

    def __init__(
        self,
        graph: UnGraph,
        count: list[int],
        subtotals: dict[str, list[int]],
        tables: QueryTables | Callable[[], QueryTables],
    ):
        self.graph = graph
        self.count = count
        self.subtotals = subtotals
        self._tables = tables

    @property
    def tables(self) -> QueryTables:
        if not isinstance(self._tables, QueryTables):
            self._tables = self._tables()
        return self._tables

    @property
    def dfs(self) -> DfsStructure:
        return self.tables.dfs

    def to_rows(self) -> list[tuple[int, int, list[int]]]:
        return [
            (v, self.count[v], [self.subtotals[k][v] for k in CASES])
            for v in range(self.graph.n)
        ]


ENGINES = ("auto", "python", "compiled")
AUTO_THRESHOLD = 4096  # below this many vertices the compile-free engine wins


def compiled_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def count_all(g: UnGraph, root: int = 0, engine: str = "auto") -> VertexCutPairReport:
    """count(v) for every vertex of a biconnected graph.

    ``engine`` picks the pure-Python passes (``"python"``), their
    numba-compiled twins (``"compiled"``), or the compiled ones for graphs
    with at least ``AUTO_THRESHOLD`` vertices when numba is installed.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if g.n < 3:
        raise NotBiconnectedError(f"graph has {g.n} vertices; at least 3 are needed", None)
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} is not a vertex")
    if engine == "auto":
        engine = "compiled" if g.n >= AUTO_THRESHOLD and compiled_available() else "python"
    with gc_paused():
        if engine == "compiled":
            return _count_all_compiled(g, root)
        d = run_dfs(g, root)
        check_biconnected(g, d)
        annotate(d, parent_labels=True)
        inv = build_inverse_lists(d)
        n = d.n
        back_partner: list = [None] * n
        meq = PartnerLists(n)
        heq = PartnerLists(n)
        anchor: list = [None] * n
        max_desc: list = [None] * n
        pre = (
            count_backedge_pairs(d, back_partner),
            count_M_eq_v(d, inv, meq),
            count_M_desc(d, inv, anchor),
            count_high_eq_v(d, inv, heq),
            count_high_lt_v(d, inv, max_desc),
        )
        # preorder -> input ids
        number = d.number
        subtotals = {k: [vals[x] for x in number] for k, vals in zip(CASES, pre)}
        count = [a + b + c + e + f for a, b, c, e, f in zip(*subtotals.values())]
    tables = QueryTables(d, inv, back_partner, meq, heq, anchor, max_desc)
    return VertexCutPairReport(g, count, subtotals, tables)


def _count_all_compiled(g: UnGraph, root: int) -> VertexCutPairReport:
    import numpy as np

    from . import _kernels as K

    n = g.n
    ends = np.fromiter(chain.from_iterable(g.edges), dtype=np.int64, count=2 * g.m)
    ea = ends[0::2].copy()
    eb = ends[1::2].copy()
    (reached, number, order, parent, tree_edge, l, l_eid, up, down, low, size,
     back_src, back_dst, back_eid) = K.dfs(n, ea, eb, root)
    if reached < n:
        raise DisconnectedError(int(np.flatnonzero(number < 0)[0]))
    kids, kstart = K.children_csr(n, parent)
    ap = K.first_articulation_point(n, parent, low, kstart)
    if ap >= 0:
        v = int(order[ap])
        raise NotBiconnectedError(f"articulation point {v}", v)
    high, links, finds = K.fast_high(n, parent, back_src, back_dst, False)
    high_p, _, _ = K.fast_high(n, parent, back_src, back_dst, True)
    M, visits, moves = K.find_m(n, parent, kids, kstart, low, l, high, False)
    M_p, _, _ = K.find_m(n, parent, kids, kstart, low, l, M, True)
    bc, bcp = K.b_count(n, parent, up, down)
    (M_flat, M_start, Mp_flat, Mp_start, high_flat, high_start,
     kids_flat, kids_start, M_pos) = K.inverse_lists(n, parent, high, high_p, M, M_p)
    back, back_partner = K.count_back(n, parent, bcp, M_p, l_eid)
    meq, meq_flat, meq_start = K.count_m_eq(n, high_p, low, M_flat, M_start, kids_flat, kids_start)
    mdesc, anchor = K.count_m_desc(n, parent, high_p, M_flat, M_start, Mp_flat, Mp_start)
    heq, heq_flat, heq_start = K.count_high_eq(n, low, size, M_p, kids, kstart, high_flat, high_start)
    hlt, max_desc = K.count_high_lt(n, parent, high, M_flat, M_start, Mp_flat, Mp_start)

    parts = (back, meq, mdesc, heq, hlt)
    subtotals = {k: vals[number].tolist() for k, vals in zip(CASES, parts)}
    count = (back + meq + mdesc + heq + hlt)[number].tolist()

    def tables() -> QueryTables:
        kid_list = kids.tolist()
        ks = kstart.tolist()
        d = DfsStructure(
            n=n,
            root=root,
            order=order.tolist(),
            number=number.tolist(),
            parent=_with_none(parent),
            children=[kid_list[ks[v] : ks[v + 1]] for v in range(n)],
            tree_edge=_with_none(tree_edge),
            back_src=back_src.tolist(),
            back_dst=back_dst.tolist(),
            back_eid=back_eid.tolist(),
            low=low.tolist(),
            l=l.tolist(),
            up=up.tolist(),
            down=down.tolist(),
            size=size.tolist(),
            high=_with_none(high),
            high_p=_with_none(high_p),
            M=_with_none(M),
            M_p=_with_none(M_p),
            b_count=_with_none(bc),
            b_count_p=_with_none(bcp),
        )
        d.stats.links = int(links)
        d.stats.finds = int(finds)
        d.stats.findm_visits = int(visits)
        d.stats.pointer_moves = int(moves)
        inv = InverseLists(
            M_flat.tolist(), M_start.tolist(), Mp_flat.tolist(), Mp_start.tolist(),
            high_flat.tolist(), high_start.tolist(), kids_flat.tolist(), kids_start.tolist(),
            _with_none(M_pos),
        )
        meq_rec = PartnerLists(0)
        meq_rec.flat, meq_rec.start = meq_flat.tolist(), meq_start.tolist()
        heq_rec = PartnerLists(0)
        heq_rec.flat, heq_rec.start = heq_flat.tolist(), heq_start.tolist()
        return QueryTables(
            d, inv, _with_none(back_partner), meq_rec, heq_rec,
            _with_none(anchor), _with_none(max_desc),
        )

    return VertexCutPairReport(g, count, subtotals, tables)


def _with_none(arr) -> list:
    out = arr.tolist()
    for i in (arr < 0).nonzero()[0].tolist():
        out[i] = None
    return out


def query_cut_edges(report: VertexCutPairReport, v: int, by_case: bool = False):
    """Edge ids ``e`` with ``{v, e}`` a cut-pair.

    Returns a set, or with ``by_case`` a dict from case name to edge-id list.
    """
    g = report.graph
    if not 0 <= v < g.n:
        raise GraphError(f"unknown vertex {v}")
    t = report.tables
    d = t.dfs
    inv = t.inverse
    x = d.number[v]
    tree_edge = d.tree_edge
    us = inv.M_flat
    out: dict[str, list[int]] = {k: [] for k in CASES}
    out["M_eq"].extend(tree_edge[u] for u in t.m_eq_partners.get(x))
    out["high_eq"].extend(tree_edge[u] for u in t.high_eq_partners.get(x))
    for c in d.children[x]:
        e = t.back_partner[c]
        if e is not None:
            out["back"].append(e)
        last = t.lowest_above[c]
        if last is not None:
            # walk M^-1(M_p(c)) towards larger vertices while still above x
            lo = inv.M_start[d.M_p[c]]
            i = inv.M_pos[last]
            while i >= lo and us[i] < x:
                out["M_desc"].append(tree_edge[us[i]])
                i -= 1
        top = t.greatest_below[c]
        if top is not None:
            # walk towards smaller vertices while still inside T(c)
            hi = inv.M_start[d.M_p[c] + 1]
            i = inv.M_pos[top]
            while i < hi and us[i] > c:
                out["high_lt"].append(tree_edge[us[i]])
                i += 1
    if by_case:
        return out
    return {e for es in out.values() for e in es}


def format_report(report: VertexCutPairReport, subtotals: bool = False) -> str:
    lines = []
    for v, cnt, parts in report.to_rows():
        if subtotals:
            lines.append("\t".join(map(str, [v, cnt, *parts])))
        else:
            lines.append(f"{v}\t{cnt}")
    return "\n".join(lines) + "\n"
