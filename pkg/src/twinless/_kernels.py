"""Compiled versions of the vertex-edge counting passes.

Each kernel mirrors its pure-Python counterpart in :mod:`dfs` and
:mod:`vertex_edge` statement for statement, on int64 arrays with ``-1``
for an undefined label.  The two engines are checked against each other
in the test suite.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NONE = -1


@njit(cache=True)
def group_by_key(keys, n, descending):
    cnt = np.zeros(n + 1, np.int64)
    for k in keys:
        if k >= 0:
            cnt[k + 1] += 1
    start = np.cumsum(cnt)
    pos = start.copy()
    flat = np.empty(start[n], np.int64)
    m = len(keys)
    for t in range(m):
        i = m - 1 - t if descending else t
        k = keys[i]
        if k >= 0:
            flat[pos[k]] = i
            pos[k] += 1
    return flat, start


@njit(cache=True)
def adjacency(n, ea, eb):
    deg = np.zeros(n + 1, np.int64)
    for e in range(len(ea)):
        deg[ea[e] + 1] += 1
        deg[eb[e] + 1] += 1
    start = np.cumsum(deg)
    pos = start.copy()
    adj = np.empty(2 * len(ea), np.int64)
    for e in range(len(ea)):
        a = ea[e]
        adj[pos[a]] = e
        pos[a] += 1
        b = eb[e]
        adj[pos[b]] = e
        pos[b] += 1
    return start, adj


@njit(cache=True)
def dfs(n, ea, eb, root):
    """Returns the number of reached vertices followed by the DFS arrays."""
    start, adj = adjacency(n, ea, eb)
    m = len(ea)
    number = np.full(n, NONE, np.int64)
    order = np.zeros(n, np.int64)
    parent = np.full(n, NONE, np.int64)
    tree_edge = np.full(n, NONE, np.int64)
    l = np.arange(n)
    l_eid = np.full(n, NONE, np.int64)
    up = np.zeros(n, np.int64)
    down = np.zeros(n, np.int64)
    current_child = np.zeros(n, np.int64)
    entered_by = np.full(n, NONE, np.int64)
    pos = start[:n].copy()
    back_src = np.empty(m, np.int64)
    back_dst = np.empty(m, np.int64)
    back_eid = np.empty(m, np.int64)
    nb = 0
    stack = np.empty(n, np.int64)
    stack[0] = root
    sp = 1
    number[root] = 0
    order[0] = root
    cnt = 1
    while sp > 0:
        v = stack[sp - 1]
        i = pos[v]
        if i == start[v + 1]:
            sp -= 1
            continue
        pos[v] = i + 1
        e = adj[i]
        if e == entered_by[v]:
            continue
        w = eb[e] if ea[e] == v else ea[e]
        wn = number[w]
        vn = number[v]
        if wn < 0:
            wn = cnt
            cnt += 1
            number[w] = wn
            order[wn] = w
            parent[wn] = vn
            tree_edge[wn] = e
            entered_by[w] = e
            current_child[vn] = wn
            stack[sp] = w
            sp += 1
        elif wn < vn:
            back_src[nb] = vn
            back_dst[nb] = wn
            back_eid[nb] = e
            nb += 1
            up[vn] += 1
            if wn < l[vn]:
                l[vn] = wn
                l_eid[vn] = e
            down[current_child[wn]] += 1
    low = l.copy()
    size = np.ones(n, np.int64)
    if cnt == n:
        for v in range(n - 1, 0, -1):
            p = parent[v]
            if low[v] < low[p]:
                low[p] = low[v]
            size[p] += size[v]
    return (
        cnt, number, order, parent, tree_edge, l, l_eid, up, down, low, size,
        back_src[:nb], back_dst[:nb], back_eid[:nb],
    )


@njit(cache=True)
def fast_high(n, parent, src, dst, to_parent):
    by_dst, _ = group_by_key(dst, n, False)
    rep = np.arange(n)
    size = np.ones(n, np.int64)
    top = np.arange(n)
    high = np.full(n, NONE, np.int64)
    links = 0
    finds = 0
    for t in range(len(by_dst) - 1, -1, -1):
        i = by_dst[t]
        v = dst[i]
        u = src[i]
        r = u
        while rep[r] != r:
            r = rep[r]
        while rep[u] != r:
            nxt_u = rep[u]
            rep[u] = r
            u = nxt_u
        u = top[r]
        finds += 1
        while True:
            p = parent[u]
            if to_parent:
                if p < 0 or p <= v:
                    break
            elif u <= v:
                break
            high[u] = v
            rp = p
            while rep[rp] != rp:
                rp = rep[rp]
            while rep[p] != rp:
                nxt_p = rep[p]
                rep[p] = rp
                p = nxt_p
            nxt = top[rp]
            finds += 1
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
    return high, links, finds


@njit(cache=True)
def children_csr(n, parent):
    cnt = np.zeros(n + 1, np.int64)
    for v in range(1, n):
        cnt[parent[v] + 1] += 1
    start = np.cumsum(cnt)
    pos = start.copy()
    flat = np.empty(max(n - 1, 0), np.int64)
    for v in range(1, n):
        p = parent[v]
        flat[pos[p]] = v
        pos[p] += 1
    return flat, start


@njit(cache=True)
def find_m(n, parent, kids, kstart, low, l, M, to_parent):
    out = np.full(n, NONE, np.int64)
    if not to_parent:
        M = out
    L = np.empty(n, np.int64)
    R = np.empty(n, np.int64)
    for x in range(n):
        t = parent[x] if to_parent else x
        a = kstart[x]
        b = kstart[x + 1]
        if t < 0 or a == b:
            L[x] = b
            R[x] = a - 1
            continue
        i = a
        while i < b and low[kids[i]] >= t:
            i += 1
        j = b - 1
        while j >= a and low[kids[j]] >= t:
            j -= 1
        L[x] = i
        R[x] = j
    visits = 0
    moves = 0
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
        m = M[kids[L[v]]]
        while True:
            visits += 1
            if l[m] < t:
                break
            i = L[m]
            while low[kids[i]] >= t:
                i += 1
            j = R[m]
            while low[kids[j]] >= t:
                j -= 1
            moves += i - L[m] + R[m] - j
            L[m] = i
            R[m] = j
            if i != j:
                break
            m = M[kids[i]]
        out[v] = m
    return out, visits, moves


@njit(cache=True)
def b_count(n, parent, up, down):
    bc = up.copy()
    bcp = np.full(n, NONE, np.int64)
    for v in range(n - 1, 0, -1):
        bcp[v] = bc[v] - down[v]
        bc[parent[v]] += bcp[v]
    if n:
        bc[0] = NONE
    return bc, bcp


@njit(cache=True)
def inverse_lists(n, parent, high, high_p, M, M_p):
    M_flat, M_start = group_by_key(M, n, True)
    Mp_flat, Mp_start = group_by_key(M_p, n, True)
    high_flat, high_start = group_by_key(high, n, False)
    by_hp, _ = group_by_key(high_p, n, True)
    by_hp = by_hp[::-1].copy()
    keys = np.empty(len(by_hp), np.int64)
    for i in range(len(by_hp)):
        keys[i] = parent[by_hp[i]]
    pos_flat, kids_start = group_by_key(keys, n, False)
    kids_flat = np.empty(len(pos_flat), np.int64)
    for i in range(len(pos_flat)):
        kids_flat[i] = by_hp[pos_flat[i]]
    M_pos = np.full(n, NONE, np.int64)
    for i in range(len(M_flat)):
        M_pos[M_flat[i]] = i
    return M_flat, M_start, Mp_flat, Mp_start, high_flat, high_start, kids_flat, kids_start, M_pos


@njit(cache=True)
def count_back(n, parent, bcp, M_p, l_eid):
    out = np.zeros(n, np.int64)
    partner = np.full(n, NONE, np.int64)
    for c in range(1, n):
        if bcp[c] == 1:
            out[parent[c]] += 1
            # the escaping back-edge (M_p(c), low(c)) is the lowest one from M_p(c)
            partner[c] = l_eid[M_p[c]]
    return out, partner


@njit(cache=True)
def count_m_eq(n, high_p, low, us, M_start, kids, kids_start):
    out = np.zeros(n, np.int64)
    flat = np.empty(n, np.int64)
    nf = 0
    rec_start = np.zeros(n + 1, np.int64)
    for v in range(n):
        rec_start[v] = nf
        i = M_start[v] + 1
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
                flat[nf] = us[i]
                nf += 1
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
                flat[nf] = us[i]
                nf += 1
            i += 1
        out[v] = cnt
    rec_start[n] = nf
    return out, flat[:nf], rec_start


@njit(cache=True)
def count_m_desc(n, parent, high_p, us, M_start, cs, Mp_start):
    out = np.zeros(n, np.int64)
    anchor = np.full(n, NONE, np.int64)
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
                anchor[c] = last
                ci += 1
                while ci < nc and parent[cs[ci]] > last:
                    c = cs[ci]
                    pc = parent[c]
                    while first < ui and us[first] >= pc:
                        n_edges -= 1
                        first += 1
                    out[pc] += n_edges
                    if n_edges:
                        anchor[c] = last
                    ci += 1
            else:
                ci += 1
    return out, anchor


@njit(cache=True)
def count_high_eq(n, low, size, M_p, kids, kstart, us, high_start):
    out = np.zeros(n, np.int64)
    flat = np.empty(n, np.int64)
    nf = 0
    rec_start = np.zeros(n + 1, np.int64)
    for v in range(n):
        rec_start[v] = nf
        a = high_start[v]
        b = high_start[v + 1]
        if a == b:
            continue
        j = kstart[v]
        cnt = 0
        for t in range(a, b):
            u = us[t]
            c = kids[j]
            while not (c <= u < c + size[c]):
                j += 1
                c = kids[j]
            if u == c:
                continue
            if low[u] == v or (M_p[c] >= 0 and u <= M_p[c]):
                cnt += 1
                flat[nf] = u
                nf += 1
        out[v] = cnt
    rec_start[n] = nf
    return out, flat[:nf], rec_start


@njit(cache=True)
def count_high_lt(n, parent, high, us, M_start, cs, Mp_start):
    out = np.zeros(n, np.int64)
    max_desc = np.full(n, NONE, np.int64)
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
                    max_desc[c] = top
                    while ui < nu and c < us[ui]:
                        n_edges += 1
                        ui += 1
                    out[parent[c]] += n_edges
                    ci += 1
            else:
                ui += 1
    return out, max_desc


@njit(cache=True)
def first_articulation_point(n, parent, low, kstart):
    """Preorder number of an articulation point, or -1."""
    if n and kstart[1] - kstart[0] > 1:
        return 0
    for v in range(2, n):
        if low[v] >= parent[v]:
            return parent[v]
    return NONE
