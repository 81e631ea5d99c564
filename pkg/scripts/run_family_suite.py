#!/usr/bin/env python3
"""Re-verify every claim about the extremal families over a degree range.

Prints one table row per degree with the certified quantities, then a
per-check pass/fail matrix.  Exits nonzero if any check fails.

Usage:
    python scripts/run_family_suite.py --family Gd --d-min 4 --d-max 12
    python scripts/run_family_suite.py --family Hd --d-min 6 --d-max 12 --precision 30
"""

import argparse
import sys
import time
from fractions import Fraction

from treepack.families import verify_Gd, verify_Hd


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=["Gd", "Hd"], required=True)
    ap.add_argument("--d-min", type=int, required=True)
    ap.add_argument("--d-max", type=int, required=True)
    ap.add_argument("--precision", type=int, default=12,
                    help="root isolation to 10^-PRECISION (default 12)")
    args = ap.parse_args()

    verify = verify_Gd if args.family == "Gd" else verify_Hd
    precision = Fraction(1, 10 ** args.precision)

    reports = []
    print(f"{'d':>4} {'n':>5} {'sigma':>6} {'kappa':>6} {'lambda2':>20} {'time':>8}")
    for d in range(args.d_min, args.d_max + 1):
        t0 = time.perf_counter()
        rep = verify(d, precision)
        dt = time.perf_counter() - t0
        reports.append(rep)
        print(f"{d:>4} {rep.graph.n:>5} {rep.sigma:>6} {rep.kappa_prime:>6} "
              f"{rep.lambda2:>20.12f} {dt:>7.2f}s")

    print()
    names = [c.name for c in reports[0].checks]
    width = max(len(n) for n in names)
    for name in names:
        row = "".join(
            " ok " if next(c for c in r.checks if c.name == name).passed else "FAIL"
            for r in reports)
        print(f"{name:<{width}}  {row}")

    failed = [(r.d, r.failures()) for r in reports if not r.all_passed]
    if failed:
        print(f"\nFAILED: {failed}", file=sys.stderr)
        return 2
    print(f"\nall {len(reports)} degrees verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
