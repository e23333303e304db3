import ast
import collections
import inspect

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twinless import oracles
from twinless.generators import (
    CorpusSpec,
    _decode_graph6,
    _encode_graph6,
    bidirect,
    corpus,
    directed_cycle,
    gen_clique,
    gen_cycle,
    gen_path,
    gen_random_2ec,
    gen_random_2vc,
    gen_random_ear_2vc,
    gen_random_sc,
    gen_random_twinless_sc,
    gen_theta,
    read_manifest,
    small_graphs,
    write_manifest,
)
from twinless.graph import GraphError, underlying

# number of unlabeled graphs per vertex count, n = 3..8
BICONNECTED_COUNTS = [1, 3, 10, 56, 468, 7123]
BRIDGELESS_CONNECTED_COUNTS = [1, 3, 11, 60, 502, 7403]


def test_structured_generators():
    assert gen_cycle(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))
    assert gen_clique(4).m == 6
    assert gen_path(4).m == 3
    theta = gen_theta([2, 2, 2])
    assert (theta.n, theta.m) == (5, 6)
    assert directed_cycle(3).edges == ((0, 1), (1, 2), (2, 0))
    assert bidirect(gen_cycle(3)).m == 6


def test_seeded_2vc_example():
    g = gen_random_2vc(30, 60, seed=7)
    assert (g.n, g.m) == (30, 60)
    assert not oracles.oracle_articulation_points(g)
    assert g == gen_random_2vc(30, 60, seed=7)


@pytest.mark.parametrize(
    "make,n,m",
    [
        (gen_random_2vc, 10, 25),
        (gen_random_ear_2vc, 12, 15),
        (gen_random_2ec, 12, 14),
        (gen_random_sc, 9, 20),
        (gen_random_twinless_sc, 9, 20),
    ],
)
def test_seed_determinism(make, n, m):
    a = make(n, m, 123)
    assert a == make(n, m, 123)
    assert (a.n, a.m) == (n, m)


@pytest.mark.parametrize(
    "make,n,m",
    [(gen_random_2vc, 5, 4), (gen_random_2vc, 4, 7), (gen_random_2ec, 2, 1), (gen_random_twinless_sc, 4, 13)],
)
def test_infeasible_parameters(make, n, m):
    with pytest.raises(GraphError):
        make(n, m, 0)


@given(st.integers(3, 25), st.integers(0, 10**6), st.floats(0, 1))
def test_generated_families_hold(n, seed, frac):
    hi = min(n * (n - 1) // 2, 3 * n)
    m = n + int(frac * (hi - n))
    assert not oracles.oracle_articulation_points(gen_random_2vc(n, m, seed))
    assert not oracles.oracle_articulation_points(gen_random_ear_2vc(n, m, seed))
    g = gen_random_2ec(n, m, seed)
    assert not oracles.oracle_bridges(g) and oracles.connected_without(g)
    d = gen_random_twinless_sc(n, m, seed)
    assert len(oracles.oracle_tsccs(d)) == 1


def test_small_graph_corpora():
    for family, expected in (("2vc", BICONNECTED_COUNTS), ("2ec", BRIDGELESS_CONNECTED_COUNTS)):
        by_n = collections.Counter(g.n for g in small_graphs(family))
        assert [by_n[n] for n in range(3, 9)] == expected
    assert all(g.n <= 5 for g in small_graphs("2vc", max_n=5))


def test_graph6_round_trip():
    for g in list(small_graphs("2ec", max_n=6)):
        assert _decode_graph6(_encode_graph6(g)) == g


def test_manifest_round_trip(tmp_path):
    params = CorpusSpec("2vc", 6, (5, 12), 30)
    inst = corpus(params)
    path = tmp_path / "manifest.txt"
    write_manifest(inst, path)
    back = read_manifest(path)
    assert [(i.family, i.seed, i.n, i.m, i.graph) for i in back] == [
        (i.family, i.seed, i.n, i.m, i.graph) for i in inst
    ]


def test_oracle_examples():
    c5 = gen_cycle(5)
    assert [oracles.oracle_count_v(c5, v) for v in range(5)] == [3] * 5
    assert [oracles.oracle_count_e(c5, e) for e in range(5)] == [4] * 5
    k4 = gen_clique(4)
    assert [oracles.oracle_count_v(k4, v) for v in range(4)] == [0] * 4
    assert [oracles.oracle_count_e(k4, e) for e in range(6)] == [0] * 6
    theta = gen_theta([2, 2, 2])
    assert [oracles.oracle_count_v(theta, v) for v in range(5)] == [3, 3, 0, 0, 0]


def test_directed_oracle_examples():
    bi_c4 = bidirect(gen_cycle(4))
    assert oracles.oracle_tsap(bi_c4) == {0, 1, 2, 3}
    assert oracles.oracle_tsb(bi_c4) == set()
    c3 = directed_cycle(3)
    assert oracles.oracle_tsap(c3) == {0, 1, 2}
    assert oracles.oracle_tsb(c3) == {0, 1, 2}
    bi_k4 = bidirect(gen_clique(4))
    assert oracles.oracle_tsap(bi_k4) == set() == oracles.oracle_tsb(bi_k4)


def test_oracle_cut_items():
    path = gen_path(4)
    assert oracles.oracle_articulation_points(path) == {1, 2}
    assert oracles.oracle_bridges(path) == {0, 1, 2}
    assert not oracles.connected_without(gen_cycle(4), vertices=[0], edges=[1])
    u, _ = underlying(bidirect(gen_cycle(4)))
    assert u == gen_cycle(4)


def test_oracles_import_only_graph_types():
    tree = ast.parse(inspect.getsource(oracles))
    imported = {
        node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom) and node.level
    }
    assert imported == {"graph"}


def test_label_oracles_on_cycle():
    from twinless.dfs import run_dfs

    d = run_dfs(gen_cycle(5))
    assert oracles.naive_high(d) == [None, 0, 0, 0, 0]
    labels = oracles.definitional_labels(d)
    assert labels["M"] == [None, 4, 4, 4, 4]
    assert labels["low"] == [0] * 5
    assert oracles.classify_vertex_pair(d, labels, 4, 0) == "M_eq"
    assert oracles.classify_vertex_pair(d, labels, 2, 4) == "back"
