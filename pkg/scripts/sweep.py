"""Run one property sweep and write its records.

    python scripts/sweep.py p3p2 --n-max 8 --orderings all --out results/p3p2.jsonl
    python scripts/sweep.py p3p2diamond --mode random_sample --n-min 5 --n-max 14 --samples 800
"""

import argparse
import sys
import time
from pathlib import Path

from chromabound.harness import SweepConfig, run_suite
from chromabound.recognition import GraphClass


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("graph_class", choices=[c.flag for c in GraphClass])
    ap.add_argument("--mode", default="enumerate_all", choices=["enumerate_all", "random_sample"])
    ap.add_argument("--n-min", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--orderings", default="auto")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args(argv)

    orderings = args.orderings if args.orderings in ("all", "auto") else int(args.orderings)
    cfg = SweepConfig(GraphClass.from_flag(args.graph_class), args.n_min, args.n_max, args.mode,
                      args.samples, args.seed, orderings)
    start = time.perf_counter()
    rep = run_suite(cfg, workers=args.workers)
    sys.stdout.write(rep.summary_text())
    print(f"elapsed {time.perf_counter() - start:.1f}s")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(rep.records_text())
        print(f"records written to {args.out}")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
