"""Tabulate the number families against SVT counts.

    python scripts/sweep_counts.py [--max-mass 12]
"""

import argparse
import math
import time

from svt.generate import count_by_generation
from svt.numbers import KCatalan, Raney, Rational, Tennis


def rows(max_mass):
    for k in range(1, 5):
        for n in range(0, max_mass // k + 1):
            yield KCatalan(n, k)
    for k in range(1, 4):
        for r in range(2, 4):
            for n in range(0, (max_mass - r) // k + 1):
                yield Raney(n, k, r)
    for a in range(1, max_mass):
        for b in range(1, max_mass - a + 1):
            if math.gcd(a, b) == 1:
                yield Rational(a, b)
    for s in range(2, 4):
        for t in range(1, s):
            for n in range(0, max_mass // s + 1):
                yield Tennis(n, s, t)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-mass", type=int, default=12)
    args = ap.parse_args()
    bad = 0
    print(f"{'family':<32} {'formula':>10} {'SVT':>10}  time")
    for fam in rows(args.max_mass):
        start = time.perf_counter()
        svt = count_by_generation(*fam.density())
        formula = fam.value()
        bad += svt != formula
        mark = "" if svt == formula else "  MISMATCH"
        print(f"{fam!r:<32} {formula:>10} {svt:>10}  {time.perf_counter() - start:.3f}s{mark}")
    print("all agree" if not bad else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
