#!/usr/bin/env python3
"""Grow the singleton-free 14/23 core level by level and compare sizes with
the coefficients of its algebraic generating function; also tabulate the
cap statistic per level.

Example:
    python3 scripts/core_growth.py --n-max 10
"""

import argparse
from collections import Counter

from partavoid.bijections import generate_14_23_core
from partavoid.enumeration import core_gf_14_23


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=9)
    args = ap.parse_args()

    g = core_gf_14_23(args.n_max)
    print("n   generated  [z^n]G  caps histogram")
    for n in range(2, args.n_max + 1):
        level = generate_14_23_core(n)
        hist = Counter(c.caps for c in level)
        tag = " ".join("%d:%d" % (j, hist[j]) for j in sorted(hist))
        mark = "" if len(level) == g.coeffs[n] else "  MISMATCH"
        print("%-3d %-10d %-7s %s%s" % (n, len(level), g.coeffs[n], tag, mark))


if __name__ == "__main__":
    main()
