#!/usr/bin/env python3
"""Spectrum walk: construct prime sets across the attainable interval.

For a shift set H the attainable correlation values close up to
[min(alpha, 0), 1].  This script walks a grid of targets across that
interval, builds a witness prime set for each by the greedy construction,
re-evaluates the exact correlation, and prints the achieved error.

Usage: python scripts/spectrum_walk.py [--shifts 0,1] [--steps 9] [--eps 1e-4]
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from multcorr import ShiftSet, construct_prime_set, correlation, describe_spectrum


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--shifts", default="0,1", help="comma-separated shift set")
    ap.add_argument("--steps", type=int, default=9)
    ap.add_argument("--eps", default="1e-4")
    args = ap.parse_args()

    shifts = ShiftSet(int(t) for t in args.shifts.split(",") if t.strip())
    eps = Fraction(args.eps)
    desc = describe_spectrum(shifts)
    print(f"H={set(shifts)}  alpha={desc.floor} (witness {desc.witness})  "
          f"interval=[{desc.lo},{desc.hi}]")

    for k in range(1, args.steps + 1):
        target = desc.lo + (1 - desc.lo) * Fraction(k, args.steps + 1)
        built = construct_prime_set(shifts, target, eps)
        achieved = correlation(built, shifts).value
        gap = abs(achieved - target)
        preview = ",".join(str(p) for p in list(built)[:6])
        more = "..." if len(built) > 6 else ""
        print(f"  target={float(target):+.6f}  achieved={float(achieved):+.6f}  "
              f"gap={float(gap):.2e}  |P|={len(built)}  P={{{preview}{more}}}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
