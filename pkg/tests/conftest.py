import itertools
import sys

from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from twinless.generators import (
    gen_random_2ec,
    gen_random_2vc,
    gen_random_ear_2vc,
    gen_random_sc,
    gen_random_twinless_sc,
)
from twinless.graph import Digraph, GraphError, UnGraph

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=80,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("repo")


def _build(make, n, m, seed):
    try:
        return make(n, m, seed)
    except GraphError:
        assume(False)


@st.composite
def biconnected_graphs(draw, max_n: int = 14):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n, min(n * (n - 1) // 2, 3 * n)))
    make = draw(st.sampled_from([gen_random_2vc, gen_random_ear_2vc]))
    return _build(make, n, m, draw(st.integers(0, 2**32)))


@st.composite
def two_edge_connected_graphs(draw, max_n: int = 14):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n, min(n * (n - 1) // 2, 3 * n)))
    make = draw(st.sampled_from([gen_random_2ec, gen_random_ear_2vc]))
    return _build(make, n, m, draw(st.integers(0, 2**32)))


@st.composite
def any_graphs(draw, max_n: int = 9):
    """Arbitrary simple undirected graphs, possibly disconnected."""
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return UnGraph(n, chosen)


@st.composite
def any_digraphs(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    arcs = [(a, b) for a in range(n) for b in range(n) if a != b]
    chosen = draw(st.lists(st.sampled_from(arcs), unique=True) if arcs else st.just([]))
    return Digraph(n, chosen)


@st.composite
def strongly_connected_digraphs(draw, max_n: int = 10):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(n, min(n * (n - 1), 3 * n)))
    return _build(gen_random_sc, n, m, draw(st.integers(0, 2**32)))


@st.composite
def twinless_digraphs(draw, max_n: int = 10):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n, min(n * (n - 1), 3 * n)))
    rate = draw(st.sampled_from([0.0, 0.3, 0.8]))
    seed = draw(st.integers(0, 2**32))
    try:
        return gen_random_twinless_sc(n, m, seed, twin_rate=rate)
    except GraphError:
        assume(False)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
