"""Degree-chromatic polynomials of all trees up to n vertices, with the leading-correction check."""

import argparse
from math import comb

from hopfgraph.characters import degree_chromatic
from hopfgraph.corpus import trees
from hopfgraph.multigraph import format_graph


def main(n_max: int, m: int) -> int:
    bad = 0
    for n in range(m + 1, n_max + 1):
        for T in trees(n):
            P = degree_chromatic(T, m)
            predicted = -sum(comb(d, m) for d in T.degrees())
            ok = P.coeff(n - m) == predicted
            bad += not ok
            print(f"{'ok ' if ok else 'BAD'} {format_graph(T):40s} P_{m} = {P}")
    print(f"{bad} mismatches")
    return bad


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--m", type=int, default=2)
    a = p.parse_args()
    raise SystemExit(1 if main(a.n_max, a.m) else 0)
