#!/usr/bin/env python3
"""Print the exact occupation-time moment polynomials P_n(x, z).

For each n up to --n-max, shows the bivariate polynomial built from the
defining recurrence and, for a grid of rational z values, the univariate
slice in the skewness variable x.  Everything is exact rational output.

Usage:
    python scripts/moment_polynomials.py --n-max 6 --z -1/2 -2 1
"""

import argparse
from fractions import Fraction

from stirbess.families import pn_recurrence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--z", type=Fraction, nargs="*", default=[Fraction(-1, 2), Fraction(-2), Fraction(1)])
    ap.add_argument("--bivariate", action="store_true", help="also print the full polynomial in x and z")
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        p = pn_recurrence(n)
        print(f"n = {n}")
        if args.bivariate:
            print(f"  P_n(x, z)    = {p}")
        for z in args.z:
            print(f"  P_n(x, {z!s:>4}) = {p.substitute_z(z)}")
        print()


if __name__ == "__main__":
    main()
