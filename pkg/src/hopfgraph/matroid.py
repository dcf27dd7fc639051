"""Graphic-matroid machinery over edge bitmasks, plus acyclic orientations."""

from __future__ import annotations

from itertools import product

from .multigraph import (
    GraphSizeError,
    Multigraph,
    _union_find,
    underlying_simple,
)

BRUTE_MAX_EDGES = 24


def _roots(G: Multigraph, A: int) -> list[int]:
    return _union_find(G.n, (e for i, e in enumerate(G.edges) if A >> i & 1))


def closure(G: Multigraph, A: int) -> int:
    """All edges whose endpoints are joined inside ``(V, A)``; loops always qualify."""
    roots = _roots(G, A)
    out = 0
    for i, (u, v) in enumerate(G.edges):
        if roots[u] == roots[v]:
            out |= 1 << i
    return out


def rank_of(G: Multigraph, A: int) -> int:
    roots = _roots(G, A)
    return G.n - len(set(roots))


def nullity_of(G: Multigraph, A: int) -> int:
    return bin(A).count("1") - rank_of(G, A)


def is_flat(G: Multigraph, A: int) -> bool:
    return closure(G, A) == A


def _edges_inside(G: Multigraph, block: int) -> int:
    out = 0
    for i, (u, v) in enumerate(G.edges):
        if block >> u & 1 and block >> v & 1:
            out |= 1 << i
    return out


def _adjacency_masks(G: Multigraph) -> list[int]:
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _connected_within(adj: list[int], block: int) -> bool:
    start = block & -block
    seen = frontier = start
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = adj[v] & block & ~seen
        seen |= new
        frontier |= new
    return seen == block


def connected_partitions(G: Multigraph):
    """Yield set partitions of ``V(G)`` (as tuples of vertex masks) whose blocks induce connected subgraphs."""
    adj = _adjacency_masks(G)

    def rec(rest: int, blocks: tuple[int, ...]):
        if not rest:
            yield blocks
            return
        low = rest & -rest
        others = rest & ~low
        sub = others
        while True:
            block = sub | low
            if _connected_within(adj, block):
                yield from rec(rest & ~block, blocks + (block,))
            if sub == 0:
                break
            sub = (sub - 1) & others

    yield from rec(G.full_mask, ())


def flats_with_blocks(G: Multigraph) -> list[tuple[int, tuple[int, ...]]]:
    """Pairs ``(flat, blocks)``: each flat with the vertex partition it induces."""
    out = []
    for blocks in connected_partitions(G):
        F = 0
        for b in blocks:
            F |= _edges_inside(G, b)
        out.append((F, blocks))
    return out


def flats(G: Multigraph) -> list[int]:
    """Every flat of the graphic matroid of ``G`` as an edge bitmask."""
    return [F for F, _ in flats_with_blocks(G)]


def flats_bruteforce(G: Multigraph) -> list[int]:
    """Fixed points of :func:`closure` over all ``2^e`` subsets."""
    if G.e > BRUTE_MAX_EDGES:
        raise GraphSizeError("too many edges for subset enumeration")
    return [A for A in range(1 << G.e) if closure(G, A) == A]


def count_acyclic_orientations(G: Multigraph) -> int:
    """``a(G) = T_G(2, 0)``, zero with a loop, one for ``K_0``."""
    if G.has_loop():
        return 0
    from .tutte import tutte

    value = tutte(underlying_simple(G))(2, 0)
    assert value.denominator == 1
    return int(value)


def _is_acyclic_digraph(n: int, arcs) -> bool:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def acyclic_orientations_bruteforce(G: Multigraph) -> list[tuple[tuple[int, int], ...]]:
    """Every acyclic orientation of the underlying simple graph, as arc tuples."""
    if G.has_loop():
        return []
    S = underlying_simple(G)
    if S.e > BRUTE_MAX_EDGES:
        raise GraphSizeError("too many edges for orientation enumeration")
    found = []
    for signs in product((False, True), repeat=S.e):
        arcs = tuple((v, u) if flip else (u, v) for (u, v), flip in zip(S.edges, signs))
        if _is_acyclic_digraph(S.n, arcs):
            found.append(arcs)
    return found


def count_spanning_trees_bruteforce(G: Multigraph) -> int:
    """Spanning forests with ``rk(G)`` edges; for connected ``G`` these are the spanning trees."""
    if G.e > BRUTE_MAX_EDGES:
        raise GraphSizeError("too many edges for subset enumeration")
    target = rank_of(G, (1 << G.e) - 1)
    count = 0
    for A in range(1 << G.e):
        if bin(A).count("1") == target and rank_of(G, A) == target:
            count += 1
    return count
