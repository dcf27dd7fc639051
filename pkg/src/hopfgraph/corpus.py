"""Graph corpora used by the verification suites and the tests."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from .multigraph import Multigraph, canonical_key, is_connected, key_to_graph

DEFAULT_SEED = 20240611


@lru_cache(maxsize=None)
def simple_graphs(n: int) -> tuple[Multigraph, ...]:
    """One canonical representative per isomorphism class of simple graphs on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        keys.add(canonical_key(Multigraph(n, edges)))
    return tuple(key_to_graph(k) for k in sorted(keys))


def corpus(n_max: int = 5) -> list[Multigraph]:
    """All simple graphs with ``1 <= n <= n_max`` (52 classes for ``n_max = 5``)."""
    return [G for n in range(1, n_max + 1) for G in simple_graphs(n)]


def connected_corpus(n_max: int = 5) -> list[Multigraph]:
    return [G for G in corpus(n_max) if is_connected(G)]


def designated_multigraphs() -> list[Multigraph]:
    """Small hand-picked graphs with loops and parallel edges."""
    return [
        Multigraph(1, ((0, 0),)),
        Multigraph(2, ((0, 1), (0, 1))),
        Multigraph(2, ((0, 0), (0, 1))),
        Multigraph(3, ((0, 1), (0, 1), (1, 2), (0, 2))),
        Multigraph(3, ((0, 1), (1, 2), (2, 2))),
        Multigraph(4, ((0, 1), (0, 1), (0, 1), (2, 3))),
        Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2))),
        Multigraph(5, ((0, 0), (1, 2), (2, 3), (3, 1), (3, 4), (3, 4))),
    ]


def random_multigraphs(
    count: int, n_max: int = 5, e_max: int = 7, seed: int = DEFAULT_SEED, loops: bool = True
) -> list[Multigraph]:
    """Seeded sample; each graph has ``1..n_max`` vertices and ``0..e_max`` edges drawn with replacement."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        e = rng.randint(0, e_max)
        edges = []
        for _ in range(e):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v and not loops:
                continue
            edges.append((u, v))
        out.append(Multigraph(n, tuple(edges)))
    return out


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Multigraph, ...]:
    """Unlabeled trees on ``n`` vertices, grown leaf by leaf."""
    if n < 1:
        return ()
    if n == 1:
        return (Multigraph(1),)
    keys = set()
    for T in trees(n - 1):
        for v in range(n - 1):
            keys.add(canonical_key(Multigraph(n, T.edges + ((v, n - 1),))))
    return tuple(key_to_graph(k) for k in sorted(keys))
