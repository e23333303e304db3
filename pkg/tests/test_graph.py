import pytest
from hypothesis import given

from twinless.generators import gen_cycle
from twinless.graph import (
    Digraph,
    GraphError,
    ParseError,
    UnGraph,
    delete,
    induced,
    parse,
    read_graph,
    serialize,
    underlying,
)
from twinless.undirected import components

from conftest import any_digraphs, any_graphs


def test_twin_pair_collapses_to_one_edge():
    u, sources = underlying(Digraph(2, [(0, 1), (1, 0)]))
    assert u.edges == ((0, 1),)
    assert sources == [[0, 1]]


def test_directed_triangle_underlying():
    u, sources = underlying(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
    assert u.m == 3
    assert all(len(s) == 1 for s in sources)


def test_underlying_counts_sources_per_edge():
    g = Digraph(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
    u, sources = underlying(g)
    assert u.m == 3
    e = u.edge_id(0, 2)
    assert sorted(sources[e]) == [2, 3]


def test_induced_triangle_pair():
    tri = UnGraph(3, [(0, 1), (1, 2), (2, 0)])
    sub = induced(tri, [0, 1])
    assert sub.graph.edges == ((0, 1),)
    assert sub.edges == (0,)


def test_induced_all_vertices_is_identity():
    g = gen_cycle(6)
    sub = induced(g, range(g.n))
    assert sub.graph == g
    assert sub.vertices == tuple(range(6))


def test_induced_cycle_subset():
    sub = induced(gen_cycle(5), [0, 1, 3])
    assert [tuple(sub.vertices[x] for x in e) for e in sub.graph.edges] == [(0, 1)]


def test_delete_edge_from_c4_gives_path():
    sub = delete(gen_cycle(4), edges=[3])
    assert sub.graph.m == 3
    assert len(components(sub.graph)) == 1


def test_delete_vertex_from_c4_gives_path():
    sub = delete(gen_cycle(4), vertices=[0])
    assert (sub.graph.n, sub.graph.m) == (3, 2)


def test_delete_vertex_and_edge_splits_c5():
    g = gen_cycle(5)
    sub = delete(g, vertices=[2], edges=[g.edge_id(4, 0)])
    comps = [sorted(sub.vertices[x] for x in c) for c in components(sub.graph)]
    assert sorted(comps) == [[0, 1], [3, 4]]


def test_parse_triangle():
    g = parse("p u 3 3\n0 1\n1 2\n2 0\n")
    assert isinstance(g, UnGraph)
    assert g.edges == ((0, 1), (1, 2), (2, 0))


def test_parse_twin_digraph():
    g = parse("p d 2 2\n0 1\n1 0\n")
    assert isinstance(g, Digraph)
    assert g.has_twin(0) and g.has_twin(1)


def test_parse_duplicate_reports_line():
    with pytest.raises(ParseError) as exc:
        parse("p u 3 3\n0 1\n0 1\n1 2\n")
    assert exc.value.line == 3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "0 1\n",
        "p x 2 1\n0 1\n",
        "p u 2 1\n0 0\n",
        "p u 2 1\n0 2\n",
        "p u 2 2\n0 1\n",
        "p u 2 1\n0 one\n",
        "p u 3 1\n0 1 2\n",
        "p u 3 2\n0 1\n1 0\n",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_skips_comments_and_blank_lines():
    g = parse("# hello\n\np d 2 1\n# arc\n1 0\n")
    assert g.edges == ((1, 0),)


def test_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        UnGraph(2, [(0, 0)])
    with pytest.raises(GraphError):
        UnGraph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Digraph(2, [(0, 2)])


def test_read_graph(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("p u 2 1\n0 1\n")
    assert read_graph(p) == UnGraph(2, [(0, 1)])


@given(any_graphs())
def test_serialize_round_trip_undirected(g):
    assert parse(serialize(g)) == g


@given(any_digraphs())
def test_serialize_round_trip_directed(g):
    assert parse(serialize(g)) == g


@given(any_digraphs())
def test_underlying_sources_partition_arcs(g):
    u, sources = underlying(g)
    flat = sorted(e for s in sources for e in s)
    assert flat == list(range(g.m))
    for ue, srcs in enumerate(sources):
        a, b = u.edges[ue]
        assert all({*g.edges[e]} == {a, b} for e in srcs)
        assert (len(srcs) == 2) == g.has_twin(srcs[0])
