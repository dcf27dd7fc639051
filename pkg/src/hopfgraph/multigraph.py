"""Finite undirected multigraphs (loops and parallel edges allowed).

Vertex sets are bitmasks over ``range(n)``; edge sets passed to
:func:`contract` and friends may be bitmasks over edge indices or iterables
of indices.  Everything here is immutable and pure.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

CANON_MAX_VERTICES = 10

VertexSet = Union[int, Iterable[int]]
EdgeSet = Union[int, Iterable[int]]


class GraphSizeError(ValueError):
    """A graph exceeds a hard size cap of some exhaustive routine."""


class GraphParseError(ValueError):
    pass


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.vertex_count}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def degrees(self) -> list[int]:
        """Degree of each vertex, counting a loop twice."""
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def __str__(self) -> str:
        return format_graph(self)


def _mask(items: VertexSet | EdgeSet, bound: int, what: str) -> int:
    if isinstance(items, int):
        if items < 0 or items >> bound:
            raise ValueError(f"{what} mask out of range")
        return items
    m = 0
    for i in items:
        if not 0 <= i < bound:
            raise ValueError(f"{what} index {i} out of range")
        m |= 1 << i
    return m


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# -- builders -----------------------------------------------------------------

def edgeless(n: int) -> Multigraph:
    return Multigraph(n, ())


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Multigraph:
    """``C_n``; ``C_1`` is one loop and ``C_2`` a double edge."""
    if n < 1:
        raise ValueError("cycle size must be >= 1")
    if n == 1:
        return Multigraph(1, ((0, 0),))
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Multigraph:
    """Path on ``n`` vertices."""
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(m: int) -> Multigraph:
    """``K_{m,1}``: centre 0 joined to ``m`` leaves."""
    return Multigraph(m + 1, tuple((0, i) for i in range(1, m + 1)))


_FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "edgeless": edgeless,
}
_PREFIX = {"K": "complete", "C": "cycle", "P": "path", "star": "star", "E": "edgeless"}


def build_named(family: str, size: int) -> Multigraph:
    if family not in _FAMILIES:
        raise ValueError(f"unknown graph family {family!r}")
    if size < 0:
        raise ValueError("size must be nonnegative")
    return _FAMILIES[family](size)


# -- structural operations ----------------------------------------------------

def induced_subgraph(G: Multigraph, T: VertexSet) -> Multigraph:
    """Induced subgraph on ``T``, relabelled ``0..|T|-1`` in increasing order."""
    mask = _mask(T, G.n, "vertex")
    return _induced(G, mask)


@lru_cache(maxsize=1 << 16)
def _induced(G: Multigraph, mask: int) -> Multigraph:
    relabel = {}
    for v in range(G.n):
        if mask >> v & 1:
            relabel[v] = len(relabel)
    edges = tuple(
        (relabel[u], relabel[v]) for u, v in G.edges if mask >> u & 1 and mask >> v & 1
    )
    return Multigraph(len(relabel), edges)


def delete_edges(G: Multigraph, F: EdgeSet) -> Multigraph:
    mask = _mask(F, G.e, "edge")
    return Multigraph(G.n, tuple(e for i, e in enumerate(G.edges) if not mask >> i & 1))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union_find(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    return [_find(parent, v) for v in range(n)]


def contract(G: Multigraph, F: EdgeSet) -> Multigraph:
    """``G/F``: merge endpoints of every edge in ``F`` and drop ``F``.

    All other edges survive, so parallel edges and new loops appear as needed.
    New vertex labels follow the smallest original vertex of each class.
    """
    mask = _mask(F, G.e, "edge")
    roots = _union_find(G.n, (e for i, e in enumerate(G.edges) if mask >> i & 1))
    label: dict[int, int] = {}
    for v in range(G.n):
        label.setdefault(roots[v], len(label))
    return Multigraph(
        len(label),
        tuple(
            (label[roots[u]], label[roots[v]])
            for i, (u, v) in enumerate(G.edges)
            if not mask >> i & 1
        ),
    )


def component_masks(G: Multigraph) -> list[int]:
    roots = _union_find(G.n, G.edges)
    comps: dict[int, int] = {}
    for v, r in enumerate(roots):
        comps[r] = comps.get(r, 0) | (1 << v)
    return list(comps.values())


def components(G: Multigraph) -> int:
    """Number of connected components; ``0`` for ``K_0``."""
    return len(component_masks(G))


def rank(G: Multigraph) -> int:
    return G.n - components(G)


def connected_components(G: Multigraph) -> list[Multigraph]:
    return [_induced(G, m) for m in component_masks(G)]


def is_connected(G: Multigraph) -> bool:
    return components(G) == 1


def disjoint_union(G: Multigraph, H: Multigraph) -> Multigraph:
    shift = G.n
    return Multigraph(G.n + H.n, G.edges + tuple((u + shift, v + shift) for u, v in H.edges))


def underlying_simple(G: Multigraph) -> Multigraph:
    """Drop loops and collapse parallel edges."""
    return Multigraph(G.n, tuple(sorted({e for e in G.edges if e[0] != e[1]})))


def relabel(G: Multigraph, perm: list[int]) -> Multigraph:
    """Apply the vertex map ``v -> perm[v]``."""
    return Multigraph(G.n, tuple((perm[u], perm[v]) for u, v in G.edges))


# -- canonical form -----------------------------------------------------------

def _refine(colors: list[int], mult: list[list[int]]) -> list[int]:
    n = len(colors)
    ncol = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], mult[v][w]) for w in range(n) if w != v and mult[v][w])))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncol:
            return colors
        ncol = len(ranks)


def _canonical_edges(n: int, edges: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    mult = [[0] * n for _ in range(n)]
    for u, v in edges:
        mult[u][v] += 1
        if u != v:
            mult[v][u] += 1
    # (u v) is an automorphism iff u, v agree on loops and on every other vertex;
    # such transpositions generate a full symmetric group on each class.
    twin = list(range(n))
    for u in range(n):
        if twin[u] != u:
            continue
        for v in range(u + 1, n):
            if twin[v] == v and mult[u][u] == mult[v][v] and all(
                mult[u][w] == mult[v][w] for w in range(n) if w != u and w != v
            ):
                twin[v] = u

    best: list = [None]

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            code = tuple(sorted(
                (min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in edges
            ))
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        tried = set()
        for v in target:
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            split = [2 * c + (0 if w == v or c != colors[v] else 1) for w, c in enumerate(colors)]
            search(_refine(split, mult))

    search(_refine([mult[v][v] for v in range(n)], mult))
    return best[0]


@lru_cache(maxsize=1 << 18)
def _canonical_cached(n: int, edges: tuple[tuple[int, int], ...]) -> bytes:
    code = _canonical_edges(n, edges)
    return bytes([n]) + bytes(i for e in code for i in e)


def canonical_key(G: Multigraph) -> bytes:
    """Isomorphism-class identifier: equal iff the multigraphs are isomorphic."""
    if G.n > CANON_MAX_VERTICES:
        raise GraphSizeError(f"canonical form supports at most {CANON_MAX_VERTICES} vertices")
    return _canonical_cached(G.n, tuple(sorted(G.edges)))


def key_to_graph(key: bytes) -> Multigraph:
    """The canonical representative encoded by ``key``."""
    n, rest = key[0], key[1:]
    return Multigraph(n, tuple((rest[i], rest[i + 1]) for i in range(0, len(rest), 2)))


def canonical_form(G: Multigraph) -> Multigraph:
    return key_to_graph(canonical_key(G))


def is_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    return G.n == H.n and G.e == H.e and canonical_key(G) == canonical_key(H)


# -- text / JSON forms --------------------------------------------------------

def format_graph(G: Multigraph) -> str:
    return f"n={G.n}; edges=" + ",".join(f"{u}-{v}" for u, v in G.edges)


_NAMED = re.compile(r"^(K|C|P|E|star)(\d+)$")
_TEXT = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*edges\s*=\s*(.*?)\s*$")


def parse_graph(spec: str) -> Multigraph:
    """Parse a named builder (``K5``), the text form, or the JSON form."""
    s = spec.strip()
    m = _NAMED.match(s)
    if m:
        return build_named(_PREFIX[m.group(1)], int(m.group(2)))
    if s.startswith("{"):
        try:
            obj = json.loads(s)
            return Multigraph(int(obj["n"]), tuple((int(u), int(v)) for u, v in obj["edges"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise GraphParseError(f"bad JSON graph: {exc}") from exc
    m = _TEXT.match(s)
    if not m:
        raise GraphParseError(f"cannot parse graph {spec!r}")
    n = int(m.group(1))
    edges = []
    body = m.group(2)
    if body:
        for tok in body.split(","):
            parts = tok.strip().split("-")
            if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
                raise GraphParseError(f"bad edge token {tok!r}")
            edges.append((int(parts[0]), int(parts[1])))
    try:
        return Multigraph(n, tuple(edges))
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc


def graph_to_json(G: Multigraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}
