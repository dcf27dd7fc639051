"""Tutte, rank-nullity and chromatic polynomials.

The main engine is deletion-contraction memoized on canonical keys.  The
memo is a plain module-level dict; CPython's ``dict.setdefault`` gives the
atomic insert-if-absent the engine needs, and values are idempotent, so
concurrent threads may share it.  Set ``HOPFGRAPH_CACHE=off`` to bypass it.
"""

from __future__ import annotations

import os
from collections import Counter

from .matroid import BRUTE_MAX_EDGES, rank_of
from .multigraph import (
    GraphSizeError,
    Multigraph,
    canonical_key,
    component_masks,
    components,
    contract,
    key_to_graph,
    rank,
    _induced,
)
from .polynomial import BivarPoly, Poly

_CACHE: dict[bytes, BivarPoly] = {}

X = BivarPoly.x()
Y = BivarPoly.y()
ONE = BivarPoly.const(1)


def cache_enabled() -> bool:
    return os.environ.get("HOPFGRAPH_CACHE", "on").lower() not in ("off", "0", "false", "no")


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def _geometric_y(m: int) -> BivarPoly:
    """``1 + y + ... + y^(m-1)``."""
    return BivarPoly({(0, j): 1 for j in range(m)})


def tutte(G: Multigraph) -> BivarPoly:
    """``T_G(x, y)`` by memoized deletion-contraction."""
    loops = G.loop_count()
    if loops:
        G = Multigraph(G.n, tuple(e for e in G.edges if e[0] != e[1]))
    result = Y**loops if loops else ONE
    for mask in component_masks(G):
        if mask & (mask - 1):  # skip isolated vertices
            result = result * _tutte_connected(_induced(G, mask))
    return result


def _tutte_connected(G: Multigraph) -> BivarPoly:
    key = canonical_key(G)
    use_cache = cache_enabled()
    if use_cache:
        hit = _CACHE.get(key)
        if hit is not None:
            return hit
    value = _tutte_reduce(key_to_graph(key))
    if use_cache:
        value = _CACHE.setdefault(key, value)
    return value


def _tutte_reduce(G: Multigraph) -> BivarPoly:
    # G is connected, loopless, canonically labelled, with >= 2 vertices.
    classes = Counter(G.edges)
    bridge = None
    for (u, v), m in classes.items():
        rest = Multigraph(G.n, tuple(e for e in G.edges if e != (u, v)))
        if components(rest) > 1:
            bridge = (u, v), m, rest
            break
    if bridge is not None:
        # the last surviving copy of a parallel class is a cut-edge: x; the
        # earlier deletions each contract to y-loops
        (u, v), m, _ = bridge
        idx = G.edges.index((u, v))
        shrunk = _contract_class(G, idx)
        return (X + _geometric_y(m) - ONE) * tutte(shrunk)
    # ordinary edge class: choose the heaviest one
    (u, v), m = max(classes.items(), key=lambda kv: (kv[1], kv[0]))
    deleted = Multigraph(G.n, tuple(e for e in G.edges if e != (u, v)))
    contracted = _contract_class(G, G.edges.index((u, v)))
    return tutte(deleted) + _geometric_y(m) * tutte(contracted)


def _contract_class(G: Multigraph, idx: int) -> Multigraph:
    """Contract edge ``idx`` and drop its whole parallel class (the copies become loops)."""
    u, v = G.edges[idx]
    label = []
    nxt = 0
    for w in range(G.n):
        if w == v:
            label.append(-1)
        else:
            label.append(nxt)
            nxt += 1
    label[v] = label[u]
    edges = tuple(
        (label[a], label[b]) for a, b in G.edges if (a, b) != (u, v)
    )
    return Multigraph(G.n - 1, edges)


def tutte_deletion_contraction_plain(G: Multigraph) -> BivarPoly:
    """Unmemoized single-edge deletion-contraction; slow reference for small graphs."""
    for i, (u, v) in enumerate(G.edges):
        if u == v:
            rest = Multigraph(G.n, G.edges[:i] + G.edges[i + 1:])
            return Y * tutte_deletion_contraction_plain(rest)
    for i, (u, v) in enumerate(G.edges):
        rest = Multigraph(G.n, G.edges[:i] + G.edges[i + 1:])
        shrunk = contract(G, 1 << i)
        if components(rest) > components(G):
            return X * tutte_deletion_contraction_plain(shrunk)
        return tutte_deletion_contraction_plain(rest) + tutte_deletion_contraction_plain(shrunk)
    return ONE


def _rank_nullity_counts(G: Multigraph) -> Counter:
    if G.e > BRUTE_MAX_EDGES:
        raise GraphSizeError("too many edges for subset expansion")
    counts: Counter = Counter()
    for A in range(1 << G.e):
        r = rank_of(G, A)
        counts[r, bin(A).count("1") - r] += 1
    return counts


def rank_nullity_poly(G: Multigraph) -> BivarPoly:
    """``R_G(x, y)`` by direct expansion over all edge subsets."""
    xm1, ym1 = X - 1, Y - 1
    total = BivarPoly()
    for (r, nu), c in _rank_nullity_counts(G).items():
        total = total + c * xm1**r * ym1**nu
    return total


def tutte_subset_expansion(G: Multigraph) -> BivarPoly:
    """``T_G(x, y)`` straight from the corank-nullity sum."""
    xm1, ym1 = X - 1, Y - 1
    rk = rank(G)
    total = BivarPoly()
    for (r, nu), c in _rank_nullity_counts(G).items():
        total = total + c * xm1 ** (rk - r) * ym1**nu
    return total


def swap_tutte_rank_nullity(P: BivarPoly, rk: int) -> BivarPoly:
    """``(x-1)^rk * P(x/(x-1), y)``; maps ``T_G`` to ``R_G`` and back."""
    xm1 = X - 1
    out = BivarPoly()
    for (i, j), c in P.terms.items():
        if i > rk:
            raise ValueError("x-degree exceeds rank")
        out = out + c * X**i * xm1 ** (rk - i) * Y**j
    return out


def rank_nullity_from_tutte(G: Multigraph) -> BivarPoly:
    """``R_G`` obtained from ``T_G``; memoized alongside the Tutte cache."""
    if not cache_enabled():
        return swap_tutte_rank_nullity(tutte(G), rank(G))
    key = b"R" + canonical_key(G)
    hit = _CACHE.get(key)
    if hit is None:
        hit = _CACHE.setdefault(key, swap_tutte_rank_nullity(tutte(G), rank(G)))
    return hit


def chromatic(G: Multigraph) -> Poly:
    """``chi(G; k) = (-1)^rk k^c T_G(1-k, 0)``."""
    T = tutte(G)
    one_minus_k = Poly([1, -1])
    acc = Poly([])
    for (i, j), c in T.terms.items():
        if j == 0:
            acc = acc + one_minus_k**i * c
    sign = -1 if rank(G) % 2 else 1
    return acc * Poly.gen() ** components(G) * sign
