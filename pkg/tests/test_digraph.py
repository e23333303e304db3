import pytest
from hypothesis import given

from twinless import oracles
from twinless.digraph import (
    NotStronglyConnectedError,
    analyze,
    dominators,
    is_strongly_connected,
    sccs,
    strong_articulation_points,
    strong_bridges,
)
from twinless.generators import bidirect, directed_cycle, gen_cycle
from twinless.graph import Digraph, UnGraph

from conftest import any_digraphs, strongly_connected_digraphs

TWO_TRIANGLES_SHARING_0 = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
TWO_TRIANGLES_SHARING_0_UNDIRECTED = UnGraph(5, TWO_TRIANGLES_SHARING_0.edges)


def test_scc_examples():
    assert sccs(directed_cycle(3)) == [[0, 1, 2]]
    assert sccs(Digraph(2, [(0, 1)])) == [[0], [1]]
    joined = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3), (4, 0)])
    assert sccs(joined) == [list(range(6))]


def test_directed_cycle_everything_strong():
    for n in range(3, 8):
        g = directed_cycle(n)
        assert strong_articulation_points(g) == set(range(n))
        assert strong_bridges(g) == set(range(n))


def test_bidirected_c4_has_no_strong_items():
    g = bidirect(gen_cycle(4))
    assert strong_articulation_points(g) == set()
    assert strong_bridges(g) == set()


def test_triangles_sharing_a_vertex():
    # with one-way triangles every vertex is on a unique cycle
    assert strong_articulation_points(TWO_TRIANGLES_SHARING_0) == set(range(5))
    assert oracles.oracle_strong_articulation_points(TWO_TRIANGLES_SHARING_0) == set(range(5))
    both_ways = bidirect(TWO_TRIANGLES_SHARING_0_UNDIRECTED)
    assert strong_articulation_points(both_ways) == {0}
    assert strong_bridges(both_ways) == set()


def test_requires_strong_connectivity():
    with pytest.raises(NotStronglyConnectedError) as exc:
        strong_bridges(Digraph(3, [(0, 1), (1, 2)]))
    assert exc.value.witness in (1, 2)
    assert not is_strongly_connected(Digraph(2, [(0, 1)]))


def test_bad_method():
    with pytest.raises(ValueError):
        analyze(directed_cycle(3), method="guess")


def test_dominators_of_diamond():
    succ = [[1, 2], [3], [3], []]
    pred = [[], [0], [0], [1, 2]]
    assert dominators(4, succ, pred, 0) == [None, 0, 0, 0]
    chain = [[1], [2], []]
    assert dominators(3, chain, [[], [0], [1]], 0) == [None, 0, 1]


@given(any_digraphs())
def test_sccs_match_oracle(g):
    assert sccs(g) == oracles.oracle_sccs(g)


@given(strongly_connected_digraphs())
def test_strong_items_match_brute_force(g):
    rep = analyze(g)
    assert rep.strong_articulation_points == oracles.oracle_strong_articulation_points(g)
    assert rep.strong_bridges == oracles.oracle_strong_bridges(g)
    assert analyze(g, method="brute") == rep


@given(strongly_connected_digraphs())
def test_dominators_match_definition(g):
    succ = [[g.edges[e][1] for e in es] for es in g.out_adj]
    pred = [[g.edges[e][0] for e in es] for es in g.in_adj]
    idom = dominators(g.n, succ, pred, 0)
    for w in range(1, g.n):
        # x dominates w iff w is unreachable from 0 once x is removed
        doms = {x for x in range(g.n) if x != w and (x == 0 or not _reaches(g, 0, w, x))}
        assert idom[w] in doms
        chain, x = set(), idom[w]
        while x is not None:
            chain.add(x)
            x = idom[x]
        assert chain == doms


def _reaches(g, s, t, banned):
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for e in g.out_adj[v]:
            w = g.edges[e][1]
            if w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return t in seen
