"""DFS tree and the labels built on it.

Inside a :class:`DfsStructure` every vertex is named by its preorder
number, so "u is an ancestor of v" implies ``u <= v`` and tree-path
comparisons become integer comparisons.  ``order`` and ``number`` translate
between preorder numbers and the ids of the input graph.

Labels that are undefined for a vertex (``high``/``M`` at the root,
``high_p``/``M_p`` at the root and its first child) are stored as ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._util import group_by_key
from .graph import GraphError, UnGraph

__all__ = [
    "DisconnectedError",
    "DfsStructure",
    "LinkFindForest",
    "OpStats",
    "InverseLists",
    "run_dfs",
    "compute_high",
    "compute_high_p",
    "compute_M",
    "compute_M_p",
    "compute_b_count",
    "build_inverse_lists",
    "annotate",
    "dump_labels",
]


class DisconnectedError(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"graph is not connected: vertex {vertex} is unreachable")


@dataclass
class OpStats:
    """Operation counters filled in by the label algorithms."""

    links: int = 0
    finds: int = 0
    findm_visits: int = 0
    pointer_moves: int = 0


@dataclass(eq=False)
class DfsStructure:
    n: int
    root: int  # input id of the root; its preorder number is 0
    order: list[int]  # preorder number -> input vertex
    number: list[int]  # input vertex -> preorder number
    parent: list  # parent[0] is None
    children: list[list[int]]  # increasing preorder
    tree_edge: list  # edge id of (v, p(v)); None at the root
    back_src: list[int]  # back-edge (v, w) stored with v = src >= w = dst
    back_dst: list[int]
    back_eid: list[int]
    low: list[int]  # min(l(v), low of children); equals v if nothing escapes
    l: list[int]
    up: list[int]
    down: list[int]  # down[c] = #back-edges from T(c) ending at p(c)
    size: list[int]

    high: list | None = None
    high_p: list | None = None
    M: list | None = None
    M_p: list | None = None
    b_count: list | None = None  # back-edges from T(v) to proper ancestors of v
    b_count_p: list | None = None  # back-edges from T(v) to proper ancestors of p(v)
    stats: OpStats = field(default_factory=OpStats)

    @property
    def m(self) -> int:
        return self.n - 1 + len(self.back_src)

    def is_ancestor(self, a: int, b: int) -> bool:
        """True if ``a`` is an ancestor of ``b`` (a vertex is its own ancestor)."""
        return a <= b < a + self.size[a]

    def root_child(self) -> int | None:
        ch = self.children[0]
        return ch[0] if len(ch) == 1 else None

    def back_edges(self):
        return zip(self.back_src, self.back_dst, self.back_eid)


def run_dfs(g: UnGraph, root: int = 0) -> DfsStructure:
    """Iterative DFS following adjacency in insertion order.

    Computes the preorder numbering, tree, back-edges, ``low``, ``l``,
    ``up``, ``down`` and subtree sizes.
    """
    n = g.n
    if not 0 <= root < n:
        raise GraphError(f"root {root} is not a vertex")
    adj = g.adj
    ends = g.edges
    number = [-1] * n
    order = [root]
    number[root] = 0
    parent: list = [None] * n
    tree_edge: list = [None] * n
    l = list(range(n))
    up = [0] * n
    down = [0] * n
    current_child = [0] * n
    back_src: list[int] = []
    back_dst: list[int] = []
    back_eid: list[int] = []
    pos = [0] * n
    entered_by = [-1] * n
    stack = [root]
    while stack:
        v = stack[-1]
        av = adj[v]
        i = pos[v]
        if i == len(av):
            stack.pop()
            continue
        pos[v] = i + 1
        e = av[i]
        if e == entered_by[v]:
            continue
        a, b = ends[e]
        w = b if a == v else a
        wn = number[w]
        vn = number[v]
        if wn < 0:
            wn = len(order)
            number[w] = wn
            order.append(w)
            parent[wn] = vn
            tree_edge[wn] = e
            entered_by[w] = e
            current_child[vn] = wn
            stack.append(w)
        elif wn < vn:
            back_src.append(vn)
            back_dst.append(wn)
            back_eid.append(e)
            up[vn] += 1
            if wn < l[vn]:
                l[vn] = wn
            down[current_child[wn]] += 1
    if len(order) < n:
        raise DisconnectedError(number.index(-1))

    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parent[v]].append(v)
    low = l[:]
    size = [1] * n
    for v in range(n - 1, 0, -1):
        p = parent[v]
        if low[v] < low[p]:
            low[p] = low[v]
        size[p] += size[v]
    return DfsStructure(
        n=n,
        root=root,
        order=order,
        number=number,
        parent=parent,
        children=children,
        tree_edge=tree_edge,
        back_src=back_src,
        back_dst=back_dst,
        back_eid=back_eid,
        low=low,
        l=l,
        up=up,
        down=down,
        size=size,
    )


class LinkFindForest:
    """Disjoint sets over a static rooted tree.

    ``link(u)`` adds the tree edge ``(u, p(u))``; ``find(x)`` returns the
    root (in the tree order) of the forest component holding ``x``.
    Union by size and path compression on the underlying sets, with the
    component's top vertex stored per set representative.
    """

    def __init__(self, parent: list):
        n = len(parent)
        self.tree_parent = parent
        self._rep = list(range(n))
        self._size = [1] * n
        self._top = list(range(n))
        self.links = 0
        self.finds = 0

    def _root(self, x: int) -> int:
        rep = self._rep
        r = x
        while rep[r] != r:
            r = rep[r]
        while rep[x] != r:
            rep[x], x = r, rep[x]
        return r

    def find(self, x: int) -> int:
        self.finds += 1
        return self._top[self._root(x)]

    def link(self, u: int) -> None:
        p = self.tree_parent[u]
        if p is None:
            raise GraphError("cannot link the root of the tree")
        a = self._root(u)
        b = self._root(p)
        if a == b:
            raise GraphError(f"vertex {u} is already linked to its parent")
        top = self._top[b]
        if self._size[a] > self._size[b]:
            a, b = b, a
        self._rep[a] = b
        self._size[b] += self._size[a]
        self._top[b] = top
        self.links += 1


def _fast_high(d: DfsStructure, to_parent: bool, stats: OpStats | None) -> list:
    # LinkFindForest inlined: this loop dominates the label computation
    n = d.n
    parent = d.parent
    src = d.back_src
    dst = d.back_dst
    by_dst, _ = group_by_key(dst, n, descending=False)
    rep = list(range(n))
    size = [1] * n
    top = list(range(n))
    links = finds = 0
    high: list = [None] * n
    # back-edges in decreasing order of their lower end
    for i in reversed(by_dst):
        v = dst[i]
        u = src[i]
        r = u
        while rep[r] != r:
            r = rep[r]
        while rep[u] != r:
            rep[u], u = r, rep[u]
        u = top[r]
        finds += 1
        while True:
            p = parent[u]
            if to_parent:
                if p is None or p <= v:
                    break
            elif u <= v:
                break
            high[u] = v
            rp = p
            while rep[rp] != rp:
                rp = rep[rp]
            while rep[p] != rp:
                rep[p], p = rp, rep[p]
            nxt = top[rp]
            finds += 1
            # link u's set (representative r) below p's set
            if size[r] > size[rp]:
                rep[rp] = r
                size[r] += size[rp]
                top[r] = nxt
            else:
                rep[r] = rp
                size[rp] += size[r]
                r = rp
            links += 1
            u = nxt
    if stats is not None:
        stats.links += links
        stats.finds += finds
    return high


def compute_high(d: DfsStructure, stats: OpStats | None = None) -> list:
    """high(v): the greatest proper ancestor of v hit by a back-edge from T(v)."""
    return _fast_high(d, False, stats)


def compute_high_p(d: DfsStructure, stats: OpStats | None = None) -> list:
    """high_p(v): as ``high`` but restricted to proper ancestors of p(v)."""
    return _fast_high(d, True, stats)


def _find_m(d: DfsStructure, to_parent: bool, M: list | None, stats: OpStats | None) -> list:
    n = d.n
    parent = d.parent
    children = d.children
    low = d.low
    l = d.l
    out: list = [None] * n
    if M is None:
        M = out
    # L/R index into children[x]; they only ever move inwards
    L = [0] * n
    R = [0] * n
    for x in range(n):
        t = x if not to_parent else parent[x]
        ch = children[x]
        if t is None or not ch:
            L[x], R[x] = len(ch), -1
            continue
        i = 0
        while i < len(ch) and low[ch[i]] >= t:
            i += 1
        j = len(ch) - 1
        while j >= 0 and low[ch[j]] >= t:
            j -= 1
        L[x], R[x] = i, j
    visits = moves = 0
    stop = 1 if to_parent else 0
    for v in range(n - 1, 0, -1):
        t = parent[v] if to_parent else v
        if t < stop:
            continue
        if l[v] < t:
            out[v] = v
            continue
        if L[v] > R[v]:
            # nothing in T(v) escapes above t
            continue
        if L[v] != R[v]:
            out[v] = v
            continue
        m = M[children[v][L[v]]]
        while True:
            visits += 1
            if l[m] < t:
                break
            chm = children[m]
            i = L[m]
            while low[chm[i]] >= t:
                i += 1
            j = R[m]
            while low[chm[j]] >= t:
                j -= 1
            moves += i - L[m] + R[m] - j
            L[m], R[m] = i, j
            if i != j:
                break
            m = M[chm[i]]
        out[v] = m
    if stats is not None:
        stats.findm_visits += visits
        stats.pointer_moves += moves
    return out


def compute_M(d: DfsStructure, stats: OpStats | None = None) -> list:
    """M(v): nearest common ancestor of the sources of back-edges leaving T(v)
    above v.  Runs FindM bottom-up with persistent child pointers."""
    return _find_m(d, False, None, stats)


def compute_M_p(d: DfsStructure, M: list | None = None, stats: OpStats | None = None) -> list:
    """M_p(v): as ``M`` but for back-edges landing above p(v).  Needs ``M``."""
    if M is None:
        M = d.M if d.M is not None else compute_M(d)
    return _find_m(d, True, M, stats)


def compute_b_count(d: DfsStructure) -> tuple[list, list]:
    """Both back-edge counters: above v itself, and above p(v).

    The first is the edge-pair counter, the second the vertex-edge one.
    """
    n = d.n
    parent = d.parent
    down = d.down
    bc = d.up[:]
    bcp: list = [None] * n
    for v in range(n - 1, 0, -1):
        bcp[v] = bc[v] - down[v]
        bc[parent[v]] += bcp[v]
    bc[0] = None
    return bc, bcp


@dataclass
class InverseLists:
    """Bucket-sorted inverse label maps, stored flat.

    The members of ``M^-1(x)`` are ``M_flat[M_start[x]:M_start[x + 1]]`` in
    decreasing order; ``Mp_*`` likewise for ``M_p``.  ``high_*`` lists are
    increasing.  ``kids_*`` holds, per vertex, its children with a defined
    ``high_p`` in decreasing ``high_p`` order.  ``M_pos[u]`` is the position
    of ``u`` inside ``M_flat``.
    """

    M_flat: list[int]
    M_start: list[int]
    Mp_flat: list[int]
    Mp_start: list[int]
    high_flat: list[int]
    high_start: list[int]
    kids_flat: list[int]
    kids_start: list[int]
    M_pos: list

    def M_inv(self, x: int) -> list[int]:
        return self.M_flat[self.M_start[x] : self.M_start[x + 1]]

    def M_p_inv(self, x: int) -> list[int]:
        return self.Mp_flat[self.Mp_start[x] : self.Mp_start[x + 1]]

    def high_inv(self, x: int) -> list[int]:
        return self.high_flat[self.high_start[x] : self.high_start[x + 1]]

    def children_by_high_p(self, x: int) -> list[int]:
        return self.kids_flat[self.kids_start[x] : self.kids_start[x + 1]]


def build_inverse_lists(d: DfsStructure) -> InverseLists:
    n = d.n
    none = [None] * n
    M_flat, M_start = group_by_key(d.M if d.M is not None else none, n, descending=True)
    Mp_flat, Mp_start = group_by_key(d.M_p if d.M_p is not None else none, n, descending=True)
    high_flat, high_start = group_by_key(d.high if d.high is not None else none, n)
    hp = d.high_p if d.high_p is not None else none
    # decreasing high_p, then stably regrouped by parent
    by_hp, _ = group_by_key(hp, n, descending=True)
    by_hp.reverse()
    parent = d.parent
    keys: list = [None] * len(by_hp)
    for i, c in enumerate(by_hp):
        keys[i] = parent[c]
    pos_flat, kids_start = group_by_key(keys, n)
    kids_flat = [by_hp[i] for i in pos_flat]
    M_pos: list = [None] * n
    for i, u in enumerate(M_flat):
        M_pos[u] = i
    return InverseLists(
        M_flat, M_start, Mp_flat, Mp_start, high_flat, high_start, kids_flat, kids_start, M_pos
    )


def annotate(d: DfsStructure, parent_labels: bool = True) -> DfsStructure:
    """Fill in high, M, b_count (and high_p, M_p when ``parent_labels``)."""
    st = d.stats
    d.high = compute_high(d, st)
    d.M = compute_M(d, st)
    if parent_labels:
        d.high_p = compute_high_p(d)
        d.M_p = compute_M_p(d, d.M)
    d.b_count, d.b_count_p = compute_b_count(d)
    return d


def dump_labels(d: DfsStructure, input_ids: bool = True) -> str:
    """One line per vertex: ``v p low l high high_p M M_p``, '-' if undefined.

    Lines follow preorder; with ``input_ids`` every value is translated to
    the input graph's vertex ids.
    """
    order = d.order

    def fmt(x):
        if x is None:
            return "-"
        return str(order[x] if input_ids else x)

    cols = [d.parent, d.low, d.l, d.high, d.high_p, d.M, d.M_p]
    lines = []
    for v in range(d.n):
        vals = [fmt(v)]
        for col in cols:
            vals.append("-" if col is None else fmt(col[v]))
        lines.append(" ".join(vals))
    return "\n".join(lines) + "\n"
