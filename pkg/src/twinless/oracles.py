"""Definitional brute-force references.

Everything here works straight from the definitions: delete items, then
test reachability by breadth-first flooding over integer bitmasks.  None
of it calls into the fast DFS label machinery; the label oracles only read
the DFS tree (parents, back-edges) that they are checking labels against.
"""

from __future__ import annotations

from .graph import Digraph, UnGraph

__all__ = [
    "connected_without",
    "oracle_cut_edges_v",
    "oracle_count_v",
    "oracle_cut_edges_e",
    "oracle_count_e",
    "oracle_articulation_points",
    "oracle_bridges",
    "oracle_sccs",
    "oracle_strong_articulation_points",
    "oracle_strong_bridges",
    "oracle_tsccs",
    "oracle_tsap",
    "oracle_tsb",
    "oracle_tscc_count",
    "naive_high",
    "definitional_labels",
    "classify_vertex_pair",
]


# --- undirected reachability -------------------------------------------------


def _masks(n: int, edges, skip_edges=()) -> list[int]:
    adj = [0] * n
    skip = set(skip_edges)
    for eid, (a, b) in enumerate(edges):
        if eid in skip:
            continue
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _flood(adj: list[int], start: int, alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected(adj: list[int], alive: int) -> bool:
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    return _flood(adj, start, alive) == alive


def connected_without(g: UnGraph, vertices=(), edges=()) -> bool:
    """Is ``g`` minus the given vertices and edges connected?"""
    adj = _masks(g.n, g.edges, edges)
    alive = (1 << g.n) - 1
    for v in vertices:
        alive &= ~(1 << v)
    return _connected(adj, alive)


def oracle_cut_edges_v(g: UnGraph, v: int) -> set[int]:
    """Edges ``e`` not incident to ``v`` with ``g - {v, e}`` disconnected."""
    adj = _masks(g.n, g.edges)
    alive = ((1 << g.n) - 1) & ~(1 << v)
    out = set()
    for eid, (a, b) in enumerate(g.edges):
        if v in (a, b):
            continue
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
        if not _connected(adj, alive):
            out.add(eid)
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
    return out


def oracle_count_v(g: UnGraph, v: int) -> int:
    return len(oracle_cut_edges_v(g, v))


def oracle_cut_edges_e(g: UnGraph, e: int) -> set[int]:
    """Edges ``f != e`` with ``g - {e, f}`` disconnected."""
    adj = _masks(g.n, g.edges, (e,))
    alive = (1 << g.n) - 1
    out = set()
    for f, (a, b) in enumerate(g.edges):
        if f == e:
            continue
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
        if not _connected(adj, alive):
            out.add(f)
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
    return out


def oracle_count_e(g: UnGraph, e: int) -> int:
    return len(oracle_cut_edges_e(g, e))


def _component_count(adj: list[int], alive: int) -> int:
    k = 0
    rest = alive
    while rest:
        start = (rest & -rest).bit_length() - 1
        rest &= ~_flood(adj, start, alive)
        k += 1
    return k


def oracle_articulation_points(g: UnGraph) -> set[int]:
    adj = _masks(g.n, g.edges)
    full = (1 << g.n) - 1
    base = _component_count(adj, full)
    out = set()
    for v in range(g.n):
        alive = full & ~(1 << v)
        # an isolated vertex disappearing lowers the count by one
        iso = 0 if adj[v] else 1
        if _component_count(adj, alive) > base - iso:
            out.add(v)
    return out


def oracle_bridges(g: UnGraph) -> set[int]:
    adj = _masks(g.n, g.edges)
    full = (1 << g.n) - 1
    base = _component_count(adj, full)
    out = set()
    for eid, (a, b) in enumerate(g.edges):
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
        if _component_count(adj, full) > base:
            out.add(eid)
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
    return out


# --- directed reachability ---------------------------------------------------


def _dmasks(n: int, edges, skip_edges=()):
    out_adj = [0] * n
    in_adj = [0] * n
    skip = set(skip_edges)
    for eid, (a, b) in enumerate(edges):
        if eid in skip:
            continue
        out_adj[a] |= 1 << b
        in_adj[b] |= 1 << a
    return out_adj, in_adj


def _scc_masks(out_adj, in_adj, alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        s = (rest & -rest).bit_length() - 1
        comp = _flood(out_adj, s, alive) & _flood(in_adj, s, alive)
        comps.append(comp)
        rest &= ~comp
    return comps


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def oracle_sccs(g: Digraph, alive: int | None = None, skip_edges=()) -> list[list[int]]:
    """SCCs by mutual reachability, sorted by smallest vertex."""
    out_adj, in_adj = _dmasks(g.n, g.edges, skip_edges)
    if alive is None:
        alive = (1 << g.n) - 1
    return sorted(_bits(c) for c in _scc_masks(out_adj, in_adj, alive))


def oracle_strong_articulation_points(g: Digraph) -> set[int]:
    out_adj, in_adj = _dmasks(g.n, g.edges)
    full = (1 << g.n) - 1
    base = len(_scc_masks(out_adj, in_adj, full))
    out = set()
    for v in range(g.n):
        # removing v also removes its own singleton-or-larger SCC membership
        if len(_scc_masks(out_adj, in_adj, full & ~(1 << v))) > base - _alone(out_adj, in_adj, full, v):
            out.add(v)
    return out


def _alone(out_adj, in_adj, alive, v) -> int:
    comp = _flood(out_adj, v, alive) & _flood(in_adj, v, alive)
    return 1 if comp == 1 << v else 0


def oracle_strong_bridges(g: Digraph) -> set[int]:
    full = (1 << g.n) - 1
    out_adj, in_adj = _dmasks(g.n, g.edges)
    base = len(_scc_masks(out_adj, in_adj, full))
    out = set()
    for eid, (a, b) in enumerate(g.edges):
        out_adj[a] ^= 1 << b
        in_adj[b] ^= 1 << a
        if len(_scc_masks(out_adj, in_adj, full)) > base:
            out.add(eid)
        out_adj[a] ^= 1 << b
        in_adj[b] ^= 1 << a
    return out


# --- twinless strong connectivity --------------------------------------------


def _tscc_masks(g: Digraph, alive: int, skip_edge: int | None = None) -> list[int]:
    skip = () if skip_edge is None else (skip_edge,)
    out_adj, in_adj = _dmasks(g.n, g.edges, skip)
    classes = []
    for comp in _scc_masks(out_adj, in_adj, alive):
        # underlying undirected graph of G[comp]
        und = [(out_adj[v] | in_adj[v]) & comp if comp >> v & 1 else 0 for v in range(g.n)]
        pairs = set()
        for v in _bits(comp):
            for w in _bits(und[v]):
                if v < w:
                    pairs.add((v, w))
        # drop bridges: an edge whose removal separates its endpoints
        kept = list(und)
        for a, b in pairs:
            und[a] ^= 1 << b
            und[b] ^= 1 << a
            if not (_flood(und, a, comp) >> b & 1):
                kept[a] &= ~(1 << b)
                kept[b] &= ~(1 << a)
            und[a] ^= 1 << b
            und[b] ^= 1 << a
        rest = comp
        while rest:
            s = (rest & -rest).bit_length() - 1
            cls = _flood(kept, s, comp)
            classes.append(cls)
            rest &= ~cls
    return classes


def oracle_tsccs(g: Digraph) -> list[list[int]]:
    return sorted(_bits(c) for c in _tscc_masks(g, (1 << g.n) - 1))


def oracle_tsap(g: Digraph) -> set[int]:
    """Vertices whose deletion splits some TSCC among its surviving members."""
    full = (1 << g.n) - 1
    before = _tscc_masks(g, full)
    out = set()
    for v in range(g.n):
        after = _tscc_masks(g, full & ~(1 << v))
        for cls in before:
            rest = cls & ~(1 << v)
            if rest and rest not in after:
                out.add(v)
                break
    return out


def oracle_tsb(g: Digraph) -> set[int]:
    full = (1 << g.n) - 1
    base = len(_tscc_masks(g, full))
    return {e for e in range(g.m) if len(_tscc_masks(g, full, e)) > base}


def oracle_tscc_count(g: Digraph, vertex: int | None = None, edge: int | None = None) -> int:
    alive = (1 << g.n) - 1
    if vertex is not None:
        alive &= ~(1 << vertex)
    return len(_tscc_masks(g, alive, edge))


# --- DFS label oracles -------------------------------------------------------


def naive_high(d) -> list:
    """The plain path-walking high computation (no set-union shortcut)."""
    high: list = [None] * d.n
    parent = d.parent
    for u, v in sorted(zip(d.back_src, d.back_dst), key=lambda e: -e[1]):
        while u > v:
            if high[u] is None:
                high[u] = v
            u = parent[u]
    return high


def _ancestors(parent, v) -> list[int]:
    path = []
    while v is not None:
        path.append(v)
        v = parent[v]
    return path


def _nca(parent, vs) -> int | None:
    if not vs:
        return None
    common = set(_ancestors(parent, vs[0]))
    for v in vs[1:]:
        common &= set(_ancestors(parent, v))
    return max(common)


def definitional_labels(d) -> dict[str, list]:
    """low, high, high_p, M, M_p straight from their definitions.

    Descendant tests walk parent pointers; NCA intersects ancestor sets.
    """
    n = d.n
    parent = d.parent
    anc = [set(_ancestors(parent, v)) for v in range(n)]
    back = list(zip(d.back_src, d.back_dst))
    out = {k: [None] * n for k in ("low", "high", "high_p", "M", "M_p")}
    for v in range(n):
        if parent[v] is None:
            out["low"][v] = v
            continue
        # back-edges (x, y) with x in T(v)
        inside = [(x, y) for x, y in back if v in anc[x]]
        targets = [y for _, y in inside]
        out["low"][v] = min(targets + [v])
        above = [(x, y) for x, y in inside if y < v]
        if above:
            out["high"][v] = max(y for _, y in above)
            out["M"][v] = _nca(parent, [x for x, _ in above])
        p = parent[v]
        if parent[p] is not None:
            above_p = [(x, y) for x, y in inside if y < p]
            if above_p:
                out["high_p"][v] = max(y for _, y in above_p)
                out["M_p"][v] = _nca(parent, [x for x, _ in above_p])
    return out


def classify_vertex_pair(d, labels: dict[str, list], v: int, eid: int) -> str:
    """Which counting case a cut-pair {v, e} falls in (preorder v).

    ``labels`` comes from :func:`definitional_labels`.
    """
    tree_of = {e: u for u, e in enumerate(d.tree_edge) if e is not None}
    if eid not in tree_of:
        return "back"
    u = tree_of[eid]
    anc_v = set(_ancestors(d.parent, v))
    if u in anc_v:
        return "M_eq" if labels["M"][u] == v else "M_desc"
    return "high_eq" if labels["high"][u] == v else "high_lt"
