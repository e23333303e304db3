"""Time count(v) (or count(e)) on doubling graph sizes and print growth ratios.

    python3 scripts/bench_scaling.py [--kind cutpairs-v] [--family cycle] [--lo 14] [--hi 20] [--runs 5] [--engine auto]

Graph generation is not timed.  The compiled kernels are loaded once
before the first measurement.
"""

from __future__ import annotations

import argparse

from twinless.cli import run_bench
from twinless.generators import gen_cycle
from twinless.vertex_edge import ENGINES, count_all


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", choices=("cutpairs-v", "cutpairs-e"), default="cutpairs-v")
    ap.add_argument("--family", choices=("cycle", "random-2vc", "random-2ec"), default="cycle")
    ap.add_argument("--lo", type=int, default=14)
    ap.add_argument("--hi", type=int, default=20)
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--engine", choices=ENGINES, default="auto")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    count_all(gen_cycle(8192), engine=args.engine)
    sizes = [2**k for k in range(args.lo, args.hi + 1)]
    rows = run_bench(args.kind, sizes, args.runs, args.family, args.seed, args.engine)
    print("n\tm\tseconds\tratio")
    prev = None
    for n, m, t in rows:
        ratio = f"{t / prev:.2f}" if prev else "-"
        print(f"{n}\t{m}\t{t:.6f}\t{ratio}")
        prev = t


if __name__ == "__main__":
    main()
