"""Table of alpha^{-1}(K_n): the flats formula, the blockwise antipode, and the closed form."""

import argparse
import time
from dataclasses import dataclass

from hopfgraph.characters import inverse, alpha, inverse_via_flats, is_acyclic
from hopfgraph.multigraph import complete
from hopfgraph.reciprocity import A009775_PREFIX, a009775_closed_form


@dataclass
class Config:
    n_max_flats: int = 8
    n_max_closed: int = 12


def main(cfg: Config) -> None:
    inv = inverse(alpha())
    print(f"{'n':>3} {'flats':>10} {'antipode':>10} {'closed':>10} {'listed':>10} {'sec':>6}")
    for n in range(1, cfg.n_max_closed + 1):
        closed = a009775_closed_form(n)
        listed = A009775_PREFIX[n - 1] if n <= len(A009775_PREFIX) else ""
        if n <= cfg.n_max_flats:
            t = time.perf_counter()
            a = inverse_via_flats(is_acyclic, complete(n))
            b = inv(complete(n))
            dt = f"{time.perf_counter() - t:.2f}"
        else:
            a = b = dt = "-"
        print(f"{n:>3} {str(a):>10} {str(b):>10} {closed:>10} {str(listed):>10} {dt:>6}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max-flats", type=int, default=Config.n_max_flats)
    p.add_argument("--n-max-closed", type=int, default=Config.n_max_closed)
    a = p.parse_args()
    main(Config(a.n_max_flats, a.n_max_closed))
