"""Seeded instance generators and test corpora.

Random families are built from ear decompositions, so every instance has
its family property by construction; it is still re-checked before being
returned, with the brute-force oracles up to ``ORACLE_CHECK_LIMIT``
vertices and with the classical linear-time routines above that.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import digraph, oracles, undirected
from .graph import Digraph, GraphError, UnGraph, underlying

__all__ = [
    "gen_cycle",
    "gen_clique",
    "gen_theta",
    "gen_path",
    "bidirect",
    "directed_cycle",
    "gen_random_2vc",
    "gen_random_ear_2vc",
    "gen_random_2ec",
    "gen_random_sc",
    "gen_random_twinless_sc",
    "small_graphs",
    "CorpusSpec",
    "Instance",
    "corpus",
    "write_manifest",
    "read_manifest",
]

MAX_TRIES = 50
ORACLE_CHECK_LIMIT = 256
# above this many vertex pairs, extra edges are drawn by rejection sampling
_ENUMERATE_PAIRS = 20_000


def _biconnected(g: UnGraph) -> bool:
    if g.n <= ORACLE_CHECK_LIMIT:
        return not oracles.oracle_articulation_points(g) and oracles.connected_without(g)
    return undirected.is_biconnected(g)


def _bridgeless_connected(g: UnGraph) -> bool:
    if g.n <= ORACLE_CHECK_LIMIT:
        return not oracles.oracle_bridges(g) and oracles.connected_without(g)
    return undirected.is_two_edge_connected(g)


def _strongly_connected(g: Digraph) -> bool:
    if g.n <= ORACLE_CHECK_LIMIT:
        return len(oracles.oracle_sccs(g)) == 1
    return digraph.is_strongly_connected(g)


def _sample_new(rng: random.Random, n: int, present: set, k: int, directed: bool) -> list[tuple[int, int]]:
    """``k`` distinct random pairs not in ``present`` (sparse case)."""
    out = []
    while len(out) < k:
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        key = (a, b) if directed else (min(a, b), max(a, b))
        if key not in present:
            present.add(key)
            out.append(key)
    return out


def gen_cycle(n: int) -> UnGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return UnGraph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> UnGraph:
    return UnGraph(n, [(i, i + 1) for i in range(n - 1)])


def gen_clique(n: int) -> UnGraph:
    return UnGraph(n, list(itertools.combinations(range(n), 2)))


def gen_theta(lengths) -> UnGraph:
    """Poles 0 and 1 joined by internally disjoint paths of the given
    edge lengths (at most one path may have length 1)."""
    if len(lengths) < 2 or sum(1 for k in lengths if k == 1) > 1 or min(lengths) < 1:
        raise GraphError(f"infeasible theta lengths {lengths}")
    edges = []
    n = 2
    for k in lengths:
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return UnGraph(n, edges)


def bidirect(g: UnGraph) -> Digraph:
    """Both orientations of every edge."""
    arcs = []
    for a, b in g.edges:
        arcs.append((a, b))
        arcs.append((b, a))
    return Digraph(g.n, arcs)


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def _relabel(rng: random.Random, n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    out = [(perm[a], perm[b]) for a, b in edges]
    rng.shuffle(out)
    return out


def _check_sizes(n: int, m: int, lo_n: int, lo_m: int, hi_m: int) -> None:
    if n < lo_n or not lo_m <= m <= hi_m:
        raise GraphError(f"infeasible parameters n={n}, m={m}")


def _add_chords(rng, n, edges, present, m):
    if n * (n - 1) // 2 > _ENUMERATE_PAIRS:
        edges.extend(_sample_new(rng, n, present, m - len(edges), False))
        return
    free = [(a, b) for a, b in itertools.combinations(range(n), 2) if (a, b) not in present]
    rng.shuffle(free)
    for a, b in free[: m - len(edges)]:
        edges.append((a, b))
        present.add((a, b))


def gen_random_2vc(n: int, m: int, seed: int) -> UnGraph:
    """Random Hamiltonian cycle plus random chords."""
    _check_sizes(n, m, 3, n, n * (n - 1) // 2)
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        perm = list(range(n))
        rng.shuffle(perm)
        edges = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
        present = {(min(a, b), max(a, b)) for a, b in edges}
        _add_chords(rng, n, edges, present, m)
        rng.shuffle(edges)
        g = UnGraph(n, edges)
        if _biconnected(g):
            return g
    raise GraphError("could not generate a biconnected graph")


def _ears(rng: random.Random, n: int, m: int, closed: bool) -> list[tuple[int, int]]:
    """Edge list grown by ears from a random starting cycle.

    Open ears join two distinct existing vertices; with ``closed`` an ear
    may also return to its starting vertex.  Ears are kept short so that
    degree-2 chains (and hence cut-pairs) are common.
    """
    k = n if m <= n else rng.randint(3, max(3, min(n, 3 + n // 4)))
    edges = [(i, (i + 1) % k) for i in range(k)]
    present = {(min(a, b), max(a, b)) for a, b in edges}
    used = k
    budget = m - k
    while used < n:
        remaining = n - used
        # an ear with t internal vertices costs t + 1 edges
        spare = budget - (remaining + 1)
        t = rng.randint(1, min(remaining, max(1, 1 + n // 5)))
        if spare < 1:
            t = remaining
        a = rng.randrange(used)
        if closed and rng.random() < 0.5 and t >= 2:
            b = a
        else:
            b = rng.randrange(used - 1)
            if b >= a:
                b += 1
        path = [a] + list(range(used, used + t)) + [b]
        for x, y in zip(path, path[1:]):
            edges.append((x, y))
            present.add((min(x, y), max(x, y)))
        used += t
        budget -= t + 1
    _add_chords(rng, n, edges, present, m)
    return edges


def gen_random_ear_2vc(n: int, m: int, seed: int) -> UnGraph:
    """Biconnected graph from an open ear decomposition plus chords."""
    _check_sizes(n, m, 3, n, n * (n - 1) // 2)
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        g = UnGraph(n, _relabel(rng, n, _ears(rng, n, m, closed=False)))
        if g.m == m and _biconnected(g):
            return g
    raise GraphError("could not generate a biconnected graph")


def gen_random_2ec(n: int, m: int, seed: int) -> UnGraph:
    """Bridgeless connected graph from a closed ear decomposition."""
    _check_sizes(n, m, 3, n, n * (n - 1) // 2)
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        g = UnGraph(n, _relabel(rng, n, _ears(rng, n, m, closed=True)))
        if g.m == m and _bridgeless_connected(g):
            return g
    raise GraphError("could not generate a 2-edge-connected graph")


def _directed_ears(rng, n, m, twin_rate, allow_twin_ears):
    lo = 2 if allow_twin_ears else 3
    k = n if m <= n else rng.randint(lo, max(lo, min(n, 3 + n // 4)))
    arcs = [(i, (i + 1) % k) for i in range(k)]
    present = set(arcs)
    used = k
    budget = m - k
    while used < n:
        remaining = n - used
        t = rng.randint(1, min(remaining, max(1, 1 + n // 5)))
        if budget - (remaining + 1) < 1:
            t = remaining
        a = rng.randrange(used)
        if (allow_twin_ears or t >= 2) and rng.random() < 0.3:
            b = a
        else:
            b = rng.randrange(used - 1)
            if b >= a:
                b += 1
        path = [a] + list(range(used, used + t)) + [b]
        if rng.random() < 0.5:
            path.reverse()
        for x, y in zip(path, path[1:]):
            arcs.append((x, y))
            present.add((x, y))
        used += t
        budget -= t + 1
    for a, b in list(arcs):
        if len(arcs) >= m:
            break
        if (b, a) not in present and rng.random() < twin_rate:
            arcs.append((b, a))
            present.add((b, a))
    if n * (n - 1) > _ENUMERATE_PAIRS:
        arcs.extend(_sample_new(rng, n, present, max(0, m - len(arcs)), True))
        return _relabel(rng, n, arcs)
    free = [(a, b) for a in range(n) for b in range(n) if a != b and (a, b) not in present]
    rng.shuffle(free)
    arcs.extend(free[: max(0, m - len(arcs))])
    return _relabel(rng, n, arcs)


def gen_random_sc(n: int, m: int, seed: int, twin_rate: float = 0.2) -> Digraph:
    """Strongly connected digraph from directed ears (twin ears allowed)."""
    _check_sizes(n, m, 2, n, n * (n - 1))
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        g = Digraph(n, _directed_ears(rng, n, m, twin_rate, True))
        if g.m == m and _strongly_connected(g):
            return g
    raise GraphError("could not generate a strongly connected digraph")


def gen_random_twinless_sc(n: int, m: int, seed: int, twin_rate: float = 0.2) -> Digraph:
    """Twinless strongly connected digraph.

    Ears of length >= 2 oriented end to end give a strongly connected
    digraph whose underlying graph is bridgeless; twins and extra arcs keep
    both properties.
    """
    _check_sizes(n, m, 3, n, n * (n - 1))
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        g = Digraph(n, _directed_ears(rng, n, m, twin_rate, False))
        u, _ = underlying(g)
        if g.m == m and _strongly_connected(g) and _bridgeless_connected(u):
            return g
    raise GraphError("could not generate a twinless strongly connected digraph")


# --- exhaustive small graphs --------------------------------------------------

_DATA = Path(__file__).with_name("data")


def _decode_graph6(line: str) -> UnGraph:
    data = [ord(ch) - 63 for ch in line.strip()]
    n = data[0]
    bits = []
    for x in data[1:]:
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    edges = []
    i = 0
    for b in range(1, n):
        for a in range(b):
            if bits[i]:
                edges.append((a, b))
            i += 1
    return UnGraph(n, edges)


def _encode_graph6(g: UnGraph) -> str:
    if g.n > 62:
        raise GraphError("graph6 short form only")
    present = {(min(a, b), max(a, b)) for a, b in g.edges}
    bits = [1 if (a, b) in present else 0 for b in range(1, g.n) for a in range(b)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for bit in bits[i : i + 6]:
            x = (x << 1) | bit
        chars.append(chr(x + 63))
    return "".join(chars)


def small_graphs(family: str, max_n: int = 8) -> Iterator[UnGraph]:
    """Every biconnected (``"2vc"``) or bridgeless connected (``"2ec"``)
    graph on 3..max_n vertices, one per isomorphism class.

    Read from the bundled graph6 tables (see scripts/build_small_graphs.py).
    """
    path = _DATA / f"small_{family}.g6"
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                g = _decode_graph6(line)
                if g.n <= max_n:
                    yield g


# --- corpora ------------------------------------------------------------------

_FAMILIES = {
    "2vc": gen_random_2vc,
    "ear2vc": gen_random_ear_2vc,
    "2ec": gen_random_2ec,
    "sc": gen_random_sc,
    "tsc": gen_random_twinless_sc,
}


@dataclass(frozen=True)
class CorpusSpec:
    """Seeded parameters for a random corpus.

    Instance ``i`` uses seed ``seed * 1_000_003 + i``; ``n`` is uniform in
    ``n_range`` and ``m`` uniform between ``n + 1`` (``n`` for cycles) and
    ``min(max_m, density * n)``.
    """

    family: str
    count: int
    n_range: tuple[int, int]
    max_m: int
    density: float = 3.0
    seed: int = 0


@dataclass(frozen=True)
class Instance:
    family: str
    seed: int
    n: int
    m: int
    graph: UnGraph | Digraph


def _sizes(params: CorpusSpec, i: int) -> tuple[int, int, int]:
    s = params.seed * 1_000_003 + i
    rng = random.Random(s)
    n = rng.randint(*params.n_range)
    directed = params.family in ("sc", "tsc")
    cap = n * (n - 1) if directed else n * (n - 1) // 2
    hi = min(params.max_m, int(params.density * n), cap)
    lo = min(n + 1, hi)
    return s, n, rng.randint(lo, max(lo, hi))


def corpus(params: CorpusSpec) -> list[Instance]:
    make = _FAMILIES[params.family]
    out = []
    for i in range(params.count):
        s, n, m = _sizes(params, i)
        out.append(Instance(params.family, s, n, m, make(n, m, s)))
    return out


def write_manifest(instances, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# family seed n m\n")
        for inst in instances:
            fh.write(f"{inst.family} {inst.seed} {inst.n} {inst.m}\n")


def read_manifest(path) -> list[Instance]:
    """Rebuild every instance listed in a manifest."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            family, seed, n, m = line.split()
            s, n, m = int(seed), int(n), int(m)
            out.append(Instance(family, s, n, m, _FAMILIES[family](n, m, s)))
    return out
