"""Scan the K_n power identity for tau over small n, k and rational x, y.

The form that divides by (x-1)^(k-1) assumes every block of the
decomposition is nonempty.  It matches only at x = 2 (or k = 1). The form
that keeps empty blocks, with K_0 weighted by (x-1)^0, matches everywhere.
"""

import argparse
from fractions import Fraction
from itertools import product

from hopfgraph.tutte_identities import tau_kn_power_check, tau_kn_power_corrected

XS = [Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2), Fraction(5, 3)]
YS = [Fraction(0), Fraction(2), Fraction(-1, 2)]


def main(n_max: int, k_max: int) -> int:
    stated_fail = corrected_fail = 0
    for n, k, x, y in product(range(1, n_max + 1), range(1, k_max + 1), XS, YS):
        s = tau_kn_power_check(n, k, x, y)
        c = tau_kn_power_corrected(n, k, x, y)
        stated_fail += not s
        corrected_fail += not c
        if not s and y == YS[0]:
            print(f"stated form fails: n={n} k={k} x={x} y={y}  (corrected form: {'ok' if c else 'FAIL'})")
    total = n_max * k_max * len(XS) * len(YS)
    print(f"stated form: {stated_fail}/{total} failures; corrected form: {corrected_fail}/{total} failures")
    return corrected_fail


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--k-max", type=int, default=3)
    a = p.parse_args()
    raise SystemExit(1 if main(a.n_max, a.k_max) else 0)
