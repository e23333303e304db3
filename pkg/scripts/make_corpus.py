"""Write seeded random corpora as graph files plus a manifest.

    python3 scripts/make_corpus.py OUT_DIR [--family 2vc] [--count 50] [--max-n 60] [--max-m 240] [--seed 0]

Each instance goes to ``OUT_DIR/<family>_<i>.txt``; ``OUT_DIR/manifest.txt``
lists family, seed, n and m so the corpus can be rebuilt with
``twinless.generators.read_manifest``.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from twinless.generators import CorpusSpec, corpus, write_manifest
from twinless.graph import serialize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    ap.add_argument("--family", choices=("2vc", "ear2vc", "2ec", "sc", "tsc"), default="2vc")
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--max-m", type=int, default=240)
    ap.add_argument("--density", type=float, default=4.0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    params = CorpusSpec(args.family, args.count, (args.min_n, args.max_n), args.max_m, args.density, args.seed)
    instances = corpus(params)
    args.out.mkdir(parents=True, exist_ok=True)
    for i, inst in enumerate(instances):
        (args.out / f"{args.family}_{i}.txt").write_text(serialize(inst.graph))
    write_manifest(instances, args.out / "manifest.txt")
    print(f"wrote {len(instances)} graphs to {args.out}")


if __name__ == "__main__":
    main()
