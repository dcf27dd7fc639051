"""The symmetric table (zeta^n * xi_c)(K_m) for 0 <= n, m <= N, computed by convolution."""

import argparse
from fractions import Fraction

from hopfgraph.multigraph import complete
from hopfgraph.reciprocity import zeta_power_xi


def main(N: int, c: Fraction) -> None:
    rows = [[zeta_power_xi(n, c, complete(m)) for m in range(N + 1)] for n in range(N + 1)]
    width = max(len(str(v)) for row in rows for v in row) + 1
    print("n\\m" + "".join(f"{m:>{width}}" for m in range(N + 1)))
    for n, row in enumerate(rows):
        print(f"{n:>3}" + "".join(f"{str(v):>{width}}" for v in row))
    sym = all(rows[n][m] == (1 if c == 1 else (-1) ** (n + m)) * rows[m][n]
              for n in range(N + 1) for m in range(N + 1)) if c in (1, -1) else None
    if sym is not None:
        print(f"reciprocity holds: {sym}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--c", type=Fraction, default=Fraction(1))
    a = p.parse_args()
    main(a.n, a.c)
