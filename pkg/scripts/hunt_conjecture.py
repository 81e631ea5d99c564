#!/usr/bin/env python3
"""Hunt for counterexamples to the open k >= 4 packing conjecture.

The conjecture: for d >= 8 and 4 <= k <= d/2, every d-regular graph with
lambda2 < d - (2k-1)/(d+1) packs k edge-disjoint spanning trees.  A hit here
would be a genuine discovery, so hits are written out as edge lists with a
JSON sidecar and the script exits 3 (distinct from pass=0 and error=2).

This is a thin loop over the library; the CLI `treepack hunt` command does
the same thing one (d, n, k) at a time.

Usage:
    python scripts/hunt_conjecture.py --d 10 --k 4 --n-min 24 --n-max 60 \
        --trials-per-n 50 --out findings/
"""

import argparse
import json
import sys
from pathlib import Path

from treepack.graphs import to_edge_list
from treepack.randgen import theorem_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, required=True)
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("--n-min", type=int, required=True)
    ap.add_argument("--n-max", type=int, required=True)
    ap.add_argument("--trials-per-n", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="findings")
    args = ap.parse_args()

    if args.k < 4:
        print("k < 4 tests a proved statement, not the conjecture; "
              "use theorem_sweep.py", file=sys.stderr)
        return 2
    if args.d < 2 * args.k:
        print(f"conjecture needs d >= 2k; got d={args.d}, k={args.k}",
              file=sys.stderr)
        return 2

    out = Path(args.out)
    hits = 0
    examined = 0
    for n in range(args.n_min, args.n_max + 1):
        if (n * args.d) % 2 or n <= args.d:
            continue
        rep = theorem_check(d=args.d, n=n, k=args.k,
                            trials=args.trials_per_n, seed=args.seed + n)
        examined += rep.trials
        for i, cx in enumerate(rep.counterexamples):
            out.mkdir(parents=True, exist_ok=True)
            stem = out / f"hit_d{args.d}_n{n}_k{args.k}_{i}"
            stem.with_suffix(".el").write_text(to_edge_list(cx.graph))
            stem.with_suffix(".json").write_text(json.dumps({
                "d": cx.d, "n": cx.n, "k": cx.k,
                "lambda2": cx.lambda2, "sigma": cx.sigma, "seed": cx.seed,
            }, indent=2) + "\n")
            hits += 1
            print(f"FINDING: {stem}.el  lambda2={cx.lambda2:.6f} "
                  f"sigma={cx.sigma} < {args.k}")

    print(f"examined {examined} graphs; {hits} findings")
    return 3 if hits else 0


if __name__ == "__main__":
    sys.exit(main())
