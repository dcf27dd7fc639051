"""Print S(G) for a few small graphs and time the flats formula against the Takeuchi sum."""

import argparse
import time

from hopfgraph.hopf import antipode_flats, antipode_takeuchi
from hopfgraph.multigraph import format_graph, parse_graph

DEFAULT = ["K2", "P3", "K3", "C4", "star3", "K4", "n=2; edges=0-1,0-1", "n=2; edges=0-0,0-1"]


def main(specs, compare_up_to=6):
    for spec in specs:
        G = parse_graph(spec)
        t = time.perf_counter()
        S = antipode_flats(G)
        t_flats = time.perf_counter() - t
        line = f"{format_graph(G)}  ({len(S)} terms, flats {t_flats * 1e3:.1f} ms"
        if G.n <= compare_up_to:
            t = time.perf_counter()
            same = antipode_takeuchi(G) == S
            line += f", takeuchi {(time.perf_counter() - t) * 1e3:.1f} ms, agree={same}"
        print(line + ")")
        for H, c in S.items():
            print(f"    {str(c):>8}  {format_graph(H)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("graphs", nargs="*", default=DEFAULT)
    p.add_argument("--compare-up-to", type=int, default=6)
    args = p.parse_args()
    main(args.graphs, args.compare_up_to)
