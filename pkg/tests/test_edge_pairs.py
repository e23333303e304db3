import pytest
from hypothesis import given

from twinless import oracles
from twinless.dfs import annotate, build_inverse_lists, run_dfs
from twinless.edge_pairs import (
    NotTwoEdgeConnectedError,
    count_all_edges,
    count_backedge_tree_pairs,
    count_tree_tree_pairs,
    format_edge_report,
    query_cut_edges_for_edge,
)
from twinless.generators import gen_clique, gen_cycle
from twinless.graph import UnGraph

from conftest import two_edge_connected_graphs


def test_backedge_tree_pairs_on_cycle():
    g = gen_cycle(5)
    d = annotate(run_dfs(g), parent_labels=False)
    count = [0] * g.m
    b_cut = {}
    count_backedge_tree_pairs(d, count, b_cut)
    back = g.edge_id(4, 0)
    assert count[back] == 4
    assert all(count[e] == 1 for e in range(g.m) if e != back)
    assert b_cut == {4: [1, 2, 3, 4]}


def test_tree_tree_pairs_on_cycle():
    g = gen_cycle(5)
    d = annotate(run_dfs(g), parent_labels=False)
    count = [0] * g.m
    max_of = [None] * d.n
    count_tree_tree_pairs(d, build_inverse_lists(d), count, max_of)
    back = g.edge_id(4, 0)
    assert all(count[e] == (0 if e == back else 3) for e in range(g.m))
    assert max_of[1:] == [4, 4, 4, 4]


def test_clique_contributes_nothing():
    g = gen_clique(4)
    d = annotate(run_dfs(g), parent_labels=False)
    count = [0] * g.m
    count_backedge_tree_pairs(d, count, {})
    count_tree_tree_pairs(d, build_inverse_lists(d), count, [None] * d.n)
    assert count == [0] * g.m
    assert count_all_edges(g).count == [0] * g.m
    assert all(query_cut_edges_for_edge(count_all_edges(g), e) == set() for e in range(g.m))


def test_cycle_law_and_query():
    for n in range(3, 12):
        rep = count_all_edges(gen_cycle(n))
        assert rep.count == [n - 1] * n
        assert query_cut_edges_for_edge(rep, 0) == set(range(1, n))


def test_nested_cycles_sharing_a_path():
    # three internally disjoint paths between 0 and 3
    g = UnGraph(7, [(0, 1), (1, 2), (2, 3), (3, 6), (6, 0), (0, 4), (4, 5), (5, 3)])
    rep = count_all_edges(g)
    assert rep.count == [oracles.oracle_count_e(g, e) for e in range(g.m)]


def test_rejects_barbell():
    barbell = UnGraph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(NotTwoEdgeConnectedError) as exc:
        count_all_edges(barbell)
    assert exc.value.witness == 3


def test_format_edge_report():
    assert format_edge_report(count_all_edges(gen_cycle(3))) == "0\t1\t2\n1\t2\t2\n2\t0\t2\n"


@given(two_edge_connected_graphs())
def test_counts_and_queries_match_oracle(g):
    rep = count_all_edges(g)
    for e in range(g.m):
        found = query_cut_edges_for_edge(rep, e)
        assert found == oracles.oracle_cut_edges_e(g, e)
        assert len(found) == rep.count[e]


@given(two_edge_connected_graphs())
def test_relation_is_symmetric(g):
    rep = count_all_edges(g)
    for e in range(g.m):
        for f in query_cut_edges_for_edge(rep, e):
            assert e in query_cut_edges_for_edge(rep, f)


@given(two_edge_connected_graphs())
def test_back_edges_never_pair(g):
    rep = count_all_edges(g)
    back = set(rep.dfs.back_eid)
    for e in back:
        assert not query_cut_edges_for_edge(rep, e) & back
