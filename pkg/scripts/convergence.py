#!/usr/bin/env python3
"""Convergence experiment: sieve averages against their exact limits.

For each configuration the exact correlation is an Euler-type product; the
sieve average S(x) has no guaranteed convergence rate, so this script samples
S(x) on a geometric grid of x and prints the gap |S(x) - limit| per sample.

Usage: python scripts/convergence.py [--x-max 10000000] [--points 8] [--threads 2]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from multcorr import PrimeSet, ShiftSet, SieveConfig, correlation, running_average

CONFIGS = [
    ((2,), (0,)),
    ((2, 3), (0,)),
    ((3, 5, 7), (0,)),
    ((3,), (1, 2)),
    ((2,), (0, 4, 6)),
    ((2, 3), (0, 4, 6)),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x-max", type=int, default=10**7)
    ap.add_argument("--points", type=int, default=8)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    grid = sorted(
        {max(1, int(args.x_max * 2 ** (-k))) for k in range(args.points)} | {args.x_max}
    )
    for primes, shifts in CONFIGS:
        pset, hset = PrimeSet(primes), ShiftSet(shifts)
        exact = correlation(pset, hset).value
        t0 = time.perf_counter()
        series = running_average(pset, hset, SieveConfig(x_max=args.x_max), threads=args.threads)
        # re-run once per grid point: cheap next to the full-range pass
        print(f"P={set(primes)} H={set(shifts)} exact={exact} "
              f"({time.perf_counter() - t0:.2f}s for x={args.x_max:.0e})")
        for x in grid:
            sx = running_average(pset, hset, SieveConfig(x_max=x), threads=args.threads)
            gap = abs(sx.final.average - exact)
            print(f"  x={x:>12,}  S(x)={float(sx.final.average):+.9f}  gap={float(gap):.3e}")
        print(f"  final signed sum at x_max: {series.final.signed_sum:+d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
