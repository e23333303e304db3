"""Write the exhaustive small-graph tables used by the test corpus.

Every biconnected and every bridgeless connected graph on 3..8 vertices,
one per isomorphism class, in graph6 format.  Graphs up to 7 vertices come
from the networkx graph atlas; 8-vertex graphs are grown by adding a vertex
to each connected 7-vertex graph with every possible neighbourhood, then
deduplicated with an isomorphism check.

    python3 scripts/build_small_graphs.py [--max-n 8]
"""

from __future__ import annotations

import argparse
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx

from twinless.generators import _encode_graph6
from twinless.graph import UnGraph
from twinless.undirected import is_biconnected, is_two_edge_connected

OUT = Path(__file__).resolve().parents[1] / "src" / "twinless" / "data"


def _to_ungraph(h: nx.Graph) -> UnGraph:
    h = nx.convert_node_labels_to_integers(h)
    return UnGraph(h.number_of_nodes(), sorted(tuple(sorted(e)) for e in h.edges()))


def _extend(base: list[nx.Graph]) -> list[nx.Graph]:
    """All graphs on one more vertex whose deletion of the new vertex gives a
    graph in ``base``, up to isomorphism."""
    buckets: dict[str, list[nx.Graph]] = defaultdict(list)
    out = []
    for h in base:
        k = h.number_of_nodes()
        for r in range(1, k + 1):
            for nbrs in combinations(range(k), r):
                g = h.copy()
                g.add_edges_from((k, x) for x in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
                if any(nx.is_isomorphic(g, other) for other in buckets[key]):
                    continue
                buckets[key].append(g)
                out.append(g)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    graphs = [h for h in nx.graph_atlas_g() if 3 <= h.number_of_nodes() <= min(7, args.max_n)]
    level = [h for h in graphs if h.number_of_nodes() == 7 and nx.is_connected(h)]
    for _ in range(8, args.max_n + 1):
        level = [g for g in _extend(level) if nx.is_connected(g)]
        graphs.extend(level)
    ungraphs = [_to_ungraph(h) for h in graphs]
    OUT.mkdir(parents=True, exist_ok=True)
    for family, keep in (("2vc", is_biconnected), ("2ec", is_two_edge_connected)):
        chosen = [g for g in ungraphs if keep(g)]
        with open(OUT / f"small_{family}.g6", "w", encoding="ascii") as fh:
            for g in chosen:
                fh.write(_encode_graph6(g) + "\n")
        sizes = defaultdict(int)
        for g in chosen:
            sizes[g.n] += 1
        print(family, dict(sorted(sizes.items())))


if __name__ == "__main__":
    main()
