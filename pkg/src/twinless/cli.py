"""Command-line front end.

Exit status: 0 on success, 1 when the input violates the command's
precondition (the witness is printed to stderr), 2 on unreadable or
malformed input, 3 when ``--check`` finds a disagreement with the
brute-force oracle.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from . import digraph, oracles
from .dfs import DisconnectedError, annotate, dump_labels, run_dfs
from .edge_pairs import count_all_edges, query_cut_edges_for_edge
from .generators import gen_cycle, gen_random_2ec, gen_random_2vc
from .graph import Digraph, GraphError, ParseError, UnGraph, read_graph, underlying
from .twinless import STRONG, TWINLESS_ONLY, analyze, tsccs
from .undirected import bridges_and_articulation_points, is_connected
from .vertex_edge import CASES, ENGINES, NotBiconnectedError, check_biconnected, count_all, query_cut_edges

EXIT_OK, EXIT_PRECONDITION, EXIT_PARSE, EXIT_CHECK = 0, 1, 2, 3


class Precondition(Exception):
    pass


class CheckFailed(Exception):
    pass


def _load(path: str, want: type):
    try:
        g = read_graph(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    if not isinstance(g, want):
        kind = "digraph (p d)" if want is Digraph else "undirected graph (p u)"
        raise ParseError(f"expected a {kind}", 1)
    return g


def _require_2vc(g: UnGraph) -> None:
    if g.n < 3:
        raise Precondition(f"not biconnected: only {g.n} vertices")
    try:
        check_biconnected(g, run_dfs(g))
    except DisconnectedError as exc:
        raise Precondition(f"not connected: unreachable vertex {exc.vertex}") from exc
    except NotBiconnectedError as exc:
        raise Precondition(f"not biconnected: articulation point {exc.witness}") from exc


def _require_2ec(g: UnGraph) -> None:
    if g.n and not is_connected(g):
        try:
            run_dfs(g)
        except DisconnectedError as exc:
            raise Precondition(f"not connected: unreachable vertex {exc.vertex}") from exc
    bridges, _ = bridges_and_articulation_points(g)
    if bridges:
        a, b = g.edges[min(bridges)]
        raise Precondition(f"not 2-edge-connected: bridge {a} {b}")


def _require_tsc(g: Digraph) -> None:
    v = digraph._unreached(g)
    if v is not None:
        raise Precondition(f"not strongly connected: vertex {v} not mutually reachable with vertex 0")
    u, _ = underlying(g)
    bridges, _ = bridges_and_articulation_points(u)
    if bridges:
        a, b = u.edges[min(bridges)]
        raise Precondition(f"not twinless strongly connected: underlying bridge {a} {b}")


def _compare(name: str, fast, slow) -> None:
    if fast != slow:
        raise CheckFailed(f"{name}: fast result {fast!r} differs from oracle {slow!r}")


# --- commands -------------------------------------------------------------------


def cmd_cutpairs_v(args) -> tuple[list, object]:
    g = _load(args.input, UnGraph)
    _require_2vc(g)
    if args.oracle:
        counts = [oracles.oracle_count_v(g, v) for v in range(g.n)]
        subtotals = None
    else:
        rep = count_all(g, engine=args.engine)
        counts, subtotals = rep.count, rep.subtotals
        if args.check:
            _compare("count(v)", counts, [oracles.oracle_count_v(g, v) for v in range(g.n)])
    rows = []
    for v in range(g.n):
        row = [v, counts[v]]
        if args.subtotals and subtotals is not None:
            row += [subtotals[k][v] for k in CASES]
        rows.append(row)
    doc = [
        {"vertex": r[0], "count": r[1], **({"subtotals": dict(zip(CASES, r[2:]))} if len(r) > 2 else {})}
        for r in rows
    ]
    return rows, {"counts": doc}


def cmd_cutpairs_e(args):
    g = _load(args.input, UnGraph)
    _require_2ec(g)
    if args.oracle:
        counts = [oracles.oracle_count_e(g, e) for e in range(g.m)]
    else:
        counts = count_all_edges(g).count
        if args.check:
            _compare("count(e)", counts, [oracles.oracle_count_e(g, e) for e in range(g.m)])
    rows = [[a, b, counts[e]] for e, (a, b) in enumerate(g.edges)]
    return rows, {"counts": [{"edge": e, "u": r[0], "v": r[1], "count": r[2]} for e, r in enumerate(rows)]}


def _edge_rows(g: UnGraph, eids) -> tuple[list, object]:
    rows = [list(g.edges[e]) for e in sorted(eids)]
    return rows, {"edges": [{"edge": e, "u": g.edges[e][0], "v": g.edges[e][1]} for e in sorted(eids)]}


def cmd_query_v(args):
    g = _load(args.input, UnGraph)
    _require_2vc(g)
    if not 0 <= args.vertex < g.n:
        raise Precondition(f"unknown vertex {args.vertex}")
    if args.oracle:
        found = oracles.oracle_cut_edges_v(g, args.vertex)
    else:
        found = query_cut_edges(count_all(g, engine=args.engine), args.vertex)
        if args.check:
            _compare("C(v)", sorted(found), sorted(oracles.oracle_cut_edges_v(g, args.vertex)))
    return _edge_rows(g, found)


def cmd_query_e(args):
    g = _load(args.input, UnGraph)
    _require_2ec(g)
    e = g.edge_id(args.u, args.v)
    if e is None:
        raise Precondition(f"unknown edge {args.u} {args.v}")
    if args.oracle:
        found = oracles.oracle_cut_edges_e(g, e)
    else:
        found = query_cut_edges_for_edge(count_all_edges(g), e)
        if args.check:
            _compare("C(e)", sorted(found), sorted(oracles.oracle_cut_edges_e(g, e)))
    return _edge_rows(g, found)


def _oracle_flags(g: Digraph):
    saps = oracles.oracle_strong_articulation_points(g)
    sbs = oracles.oracle_strong_bridges(g)
    aps = {v: STRONG if v in saps else TWINLESS_ONLY for v in sorted(oracles.oracle_tsap(g))}
    brs = {e: STRONG if e in sbs else TWINLESS_ONLY for e in sorted(oracles.oracle_tsb(g))}
    after_v = {v: oracles.oracle_tscc_count(g, vertex=v) for v, f in aps.items() if f == TWINLESS_ONLY}
    after_e = {e: oracles.oracle_tscc_count(g, edge=e) for e, f in brs.items() if f == TWINLESS_ONLY}
    return aps, brs, after_v, after_e


def _twinless(args):
    g = _load(args.input, Digraph)
    _require_tsc(g)
    if args.oracle:
        return g, _oracle_flags(g)
    rep = analyze(g)
    fast = (rep.articulation_points, rep.bridges, rep.count_after_vertex, rep.count_after_edge)
    if args.check:
        _compare("twinless report", fast, _oracle_flags(g))
    return g, fast


def cmd_tsap(args):
    g, (aps, _, after_v, _) = _twinless(args)
    rows = [[v, flag, after_v.get(v, "-")] for v, flag in aps.items()]
    doc = [{"vertex": v, "flag": f, "tsccs_after": after_v.get(v)} for v, f in aps.items()]
    return rows, {"twinless_strong_articulation_points": doc}


def cmd_tsb(args):
    g, (_, brs, _, after_e) = _twinless(args)
    rows = [[g.edges[e][0], g.edges[e][1], flag, after_e.get(e, "-")] for e, flag in brs.items()]
    doc = [
        {"edge": e, "tail": g.edges[e][0], "head": g.edges[e][1], "flag": f, "tsccs_after": after_e.get(e)}
        for e, f in brs.items()
    ]
    return rows, {"twinless_strong_bridges": doc}


def cmd_tscc(args):
    g = _load(args.input, Digraph)
    classes = oracles.oracle_tsccs(g) if args.oracle else tsccs(g)
    if args.check and not args.oracle:
        _compare("TSCCs", classes, oracles.oracle_tsccs(g))
    return [list(c) for c in classes], {"tsccs": classes}


def cmd_labels(args):
    g = _load(args.input, UnGraph)
    _require_2vc(g)
    if not 0 <= args.root < g.n:
        raise Precondition(f"unknown root {args.root}")
    d = annotate(run_dfs(g, args.root))
    lines = dump_labels(d).splitlines()
    keys = ("v", "p", "low", "l", "high", "high_p", "M", "M_p")
    rows = [line.split() for line in lines]
    return rows, {"labels": [dict(zip(keys, r)) for r in rows]}


def _bench_graph(family: str, n: int, seed: int):
    if family == "cycle":
        return gen_cycle(n)
    if family == "random-2vc":
        return gen_random_2vc(n, 2 * n, seed)
    return gen_random_2ec(n, 2 * n, seed)


def run_bench(kind: str, sizes, runs: int = 5, family: str = "cycle", seed: int = 0, engine: str = "auto"):
    """Median wall time of the fast path per size: list of (n, m, seconds)."""
    out = []
    for n in sizes:
        g = _bench_graph(family, n, seed)
        times = []
        for _ in range(runs):
            start = time.perf_counter()
            if kind == "cutpairs-v":
                count_all(g, engine=engine)
            else:
                count_all_edges(g)
            times.append(time.perf_counter() - start)
        out.append((g.n, g.m, statistics.median(times)))
    return out


def cmd_bench(args):
    if args.n is not None:
        sizes = [args.n]
    else:
        lo, hi = args.log2
        sizes = [2**k for k in range(lo, hi + 1)]
    rows = [[n, m, f"{t:.6f}"] for n, m, t in run_bench(args.kind, sizes, args.runs, args.family, args.seed, args.engine)]
    return rows, {"bench": [{"n": r[0], "m": r[1], "seconds": float(r[2])} for r in rows]}


COMMANDS = {
    "tsap": cmd_tsap,
    "tsb": cmd_tsb,
    "tscc": cmd_tscc,
    "cutpairs-v": cmd_cutpairs_v,
    "cutpairs-e": cmd_cutpairs_e,
    "query-v": cmd_query_v,
    "query-e": cmd_query_e,
    "labels": cmd_labels,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="use the brute-force definitions")
    mode.add_argument("--check", action="store_true", help="run fast path and oracle and compare")

    ap = argparse.ArgumentParser(prog="twinless", description="Twinless strong connectivity and cut-pair counting.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name != "bench":
            p.add_argument("input", help="graph file ('p d n m' or 'p u n m' header)")
        return p

    add("tsap", "twinless strong articulation points of a digraph")
    add("tsb", "twinless strong bridges of a digraph")
    add("tscc", "twinless strongly connected components of a digraph")
    p = add("cutpairs-v", "count(v) for every vertex of a biconnected graph")
    p.add_argument("--subtotals", action="store_true", help="append the per-case subtotals")
    p.add_argument("--engine", choices=ENGINES, default="auto")
    add("cutpairs-e", "count(e) for every edge of a 2-edge-connected graph")
    p = add("query-v", "edges forming a cut-pair with a vertex")
    p.add_argument("vertex", type=int)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p = add("query-e", "edges forming a cut-pair with an edge")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p = add("labels", "dump DFS labels of a biconnected graph")
    p.add_argument("--root", type=int, default=0)
    p = add("bench", "time the fast counting path on generated graphs")
    p.add_argument("kind", choices=("cutpairs-v", "cutpairs-e"))
    size = p.add_mutually_exclusive_group()
    size.add_argument("--n", type=int)
    size.add_argument("--log2", type=int, nargs=2, metavar=("LO", "HI"), default=(14, 20))
    p.add_argument("--family", choices=("cycle", "random-2vc", "random-2ec"), default="cycle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    return ap


def _emit(rows, doc, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(doc, out, sort_keys=True)
        out.write("\n")
    else:
        for row in rows:
            out.write("\t".join(map(str, row)) + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if not hasattr(args, "engine"):
        args.engine = "auto"
    try:
        rows, doc = COMMANDS[args.command](args)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except Precondition as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except CheckFailed as exc:
        err.write(f"check failed: {exc}\n")
        return EXIT_CHECK
    except GraphError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    _emit(rows, doc, args.format, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
