"""Command-line front end.

Every subcommand prints one JSON object (or, with ``--format text``, a few
aligned ``key: value`` lines).  Exit status: 0 on success, 1 when a
``verify`` suite reports a failure, 2 on unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import characters as ch
from .corpus import DEFAULT_SEED
from .hopf import GraphSum, antipode_linear
from .matroid import count_acyclic_orientations, flats_with_blocks, rank_of
from .multigraph import GraphParseError, GraphSizeError, format_graph, parse_graph
from .tutte import chromatic, clear_cache, tutte
from .verify import SUITES, VerifyConfig, run_suite


class UsageError(Exception):
    """Bad command-line input; reported with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_grid(spec: str) -> list[int]:
    """``"-2..4"`` -> ``[-2, ..., 4]``; also accepts comma lists ``"1,3,5"``."""
    s = spec.strip()
    try:
        if ".." in s:
            lo, hi = s.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if lo_i > hi_i:
                raise UsageError(f"empty grid {spec!r}")
            return list(range(lo_i, hi_i + 1))
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad grid {spec!r}") from exc


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--graph", help="K5, C6, P4, star3, E2, 'n=3; edges=0-1,1-2' or JSON")
    common.add_argument("--graph-file", help="file holding one graph spec")
    common.add_argument("--char", help="zeta, eps, alpha, edgeless, xi:c, tau:x,y, rho:x,y, eta:<graph>, bar:/tilde: prefixes")
    common.add_argument("--k", type=int)
    common.add_argument("--x", type=_fraction)
    common.add_argument("--y", type=_fraction)
    common.add_argument("--m", type=int)
    common.add_argument("--grid", help="range of k like -2..4")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--clear-cache", action="store_true", help="drop the Tutte memo before running")

    p = _Parser(prog="hopfgraph", description="Graph Hopf algebra computations")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in (
        ("antipode", "antipode S(G) as a graph sum"),
        ("tutte", "Tutte polynomial (or its value at --x --y)"),
        ("chromatic", "chromatic polynomial in k"),
        ("degree-chromatic", "degree-chromatic polynomial P_m(G; k)"),
        ("char-eval", "value of a character on G"),
        ("char-power", "convolution powers phi^k(G) for --k or --grid"),
        ("poly-in-k", "the polynomial k -> phi^k(G)"),
        ("flats", "flats of the graphic matroid"),
        ("acyclic-count", "number of acyclic orientations"),
    ):
        sub.add_parser(name, parents=[common], help=text)
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help=", ".join(sorted(SUITES)) + ", all")
    return p


def _graph(args):
    if args.graph and args.graph_file:
        raise UsageError("give --graph or --graph-file, not both")
    if args.graph_file:
        try:
            with open(args.graph_file) as fh:
                spec = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    elif args.graph:
        spec = args.graph
    else:
        raise UsageError("this command needs --graph or --graph-file")
    return parse_graph(spec)


def _char(args):
    if not args.char:
        raise UsageError("this command needs --char")
    return ch.parse_character(args.char)


def _run(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "verify":
        cfg = VerifyConfig(seed=args.seed, jobs=max(1, args.jobs))
        try:
            report = run_suite(args.suite, cfg)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
        out = report.to_json()
        out["suite"] = args.suite
        return out, 0 if report.passed else 1

    G = _graph(args)
    g = format_graph(G)
    if cmd == "antipode":
        return {"graph": g, "terms": antipode_linear(GraphSum.of(G)).to_json()}, 0
    if cmd == "tutte":
        T = tutte(G)
        out = T.to_json()
        if args.x is not None or args.y is not None:
            if args.x is None or args.y is None:
                raise UsageError("tutte evaluation needs both --x and --y")
            out["value"] = str(T(args.x, args.y))
        return out, 0
    if cmd == "chromatic":
        return chromatic(G).to_json(), 0
    if cmd == "degree-chromatic":
        if args.m is None:
            raise UsageError("degree-chromatic needs --m")
        if args.m < 1:
            raise UsageError("--m must be at least 1")
        return ch.degree_chromatic(G, args.m).to_json(), 0
    if cmd == "acyclic-count":
        return {"graph": g, "count": count_acyclic_orientations(G)}, 0
    if cmd == "flats":
        rows = []
        for F, blocks in flats_with_blocks(G):
            rows.append({
                "edges": [i for i in range(G.e) if F >> i & 1],
                "rank": rank_of(G, F),
                "blocks": [[v for v in range(G.n) if b >> v & 1] for b in blocks],
            })
        rows.sort(key=lambda r: (r["rank"], r["edges"]))
        return {"graph": g, "count": len(rows), "flats": rows}, 0

    phi = _char(args)
    if cmd == "char-eval":
        return {"graph": g, "char": args.char, "value": str(phi(G))}, 0
    if cmd == "char-power":
        if args.grid is not None:
            ks = parse_grid(args.grid)
        elif args.k is not None:
            ks = [args.k]
        else:
            raise UsageError("char-power needs --k or --grid")
        vals = ch.power_values(phi, G, ks)
        return {"graph": g, "char": args.char, "values": [{"k": k, "value": str(vals[k])} for k in ks]}, 0
    if cmd == "poly-in-k":
        out = ch.poly_in_k(phi, G).to_json()
        return {"graph": g, "char": args.char, **out}, 0
    raise UsageError(f"unknown command {cmd!r}")


def _text(obj, indent: int = 0) -> str:
    pad = " " * indent
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{str(k):<{width}} :")
                lines.append(_text(v, indent + 2))
            else:
                lines.append(f"{pad}{str(k):<{width}} : {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            f"{pad}- " + (json.dumps(item, sort_keys=True) if isinstance(item, (dict, list)) else str(item))
            for item in obj
        )
    return f"{pad}{obj}"


_VALUE_FLAGS = ("--grid", "--x", "--y", "--k", "--m", "--seed", "--char")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--grid -2..4`` into ``--grid=-2..4`` so argparse does not read a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    fmt = "json"
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        if args.clear_cache:
            clear_cache()
        out, code = _run(args)
    except (UsageError, GraphParseError, GraphSizeError, ValueError) as exc:
        err = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(err, sort_keys=True))
        return 2
    if fmt == "text":
        print(_text(out))
    else:
        print(json.dumps(out, sort_keys=False))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
