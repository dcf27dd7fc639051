"""The graph Hopf algebra: graph sums, product, coproduct, counit, antipode."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .matroid import count_acyclic_orientations, flats_with_blocks
from .multigraph import (
    GraphSizeError,
    Multigraph,
    canonical_key,
    connected_components,
    disjoint_union,
    format_graph,
    key_to_graph,
    parse_graph,
    _induced,
)
from .polynomial import Rational

TAKEUCHI_MAX_VERTICES = 8

UNIT_KEY = canonical_key(Multigraph(0))


class GraphSum:
    """Finite rational combination of isomorphism classes of multigraphs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[bytes, Rational] | None = None):
        self.terms: dict[bytes, Fraction] = {
            k: Fraction(c) for k, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def of(cls, G: Multigraph, coeff: Rational = 1) -> GraphSum:
        return cls({canonical_key(G): coeff})

    @classmethod
    def unit(cls) -> GraphSum:
        return cls({UNIT_KEY: 1})

    def __add__(self, other: GraphSum) -> GraphSum:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GraphSum(out)

    def __neg__(self) -> GraphSum:
        return GraphSum({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: GraphSum) -> GraphSum:
        return self + (-other)

    def scale(self, c: Rational) -> GraphSum:
        return GraphSum({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GraphSum):
            return product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, G: Multigraph) -> Fraction:
        return self.terms.get(canonical_key(G), Fraction(0))

    def homogeneous(self, n: int) -> GraphSum:
        """Degree-``n`` component (keys whose graph has ``n`` vertices)."""
        return GraphSum({k: c for k, c in self.terms.items() if k[0] == n})

    def degrees(self) -> set[int]:
        return {k[0] for k in self.terms}

    def items(self) -> list[tuple[Multigraph, Fraction]]:
        return [(key_to_graph(k), c) for k, c in sorted(self.terms.items())]

    def to_json(self) -> list[dict]:
        return [{"graph": format_graph(G), "coeff": str(c)} for G, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> GraphSum:
        out = GraphSum()
        for term in data:
            out = out + GraphSum.of(parse_graph(term["graph"]), Fraction(term["coeff"]))
        return out

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{format_graph(G)}]" for G, c in self.items())
        return f"GraphSum({body or '0'})"


@lru_cache(maxsize=1 << 16)
def _key_product(a: bytes, b: bytes) -> bytes:
    return canonical_key(disjoint_union(key_to_graph(a), key_to_graph(b)))


def product(a: GraphSum, b: GraphSum) -> GraphSum:
    """Bilinear extension of disjoint union."""
    out: dict[bytes, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            k = _key_product(ka, kb) if ka <= kb else _key_product(kb, ka)
            out[k] = out.get(k, 0) + ca * cb
    return GraphSum(out)


def counit(a: GraphSum) -> Fraction:
    return a.terms.get(UNIT_KEY, Fraction(0))


def coproduct(G: Multigraph) -> list[tuple[bytes, bytes, int]]:
    """Sweedler terms ``(G|T, G|T^c, multiplicity)`` over all vertex subsets ``T``."""
    full = G.full_mask
    counts: Counter = Counter()
    for T in range(1 << G.n):
        counts[canonical_key(_induced(G, T)), canonical_key(_induced(G, full ^ T))] += 1
    return sorted((left, right, m) for (left, right), m in counts.items())


def coproduct_linear(a: GraphSum) -> dict[tuple[bytes, bytes], Fraction]:
    out: dict[tuple[bytes, bytes], Fraction] = {}
    for k, c in a.terms.items():
        for left, right, m in coproduct(key_to_graph(k)):
            out[left, right] = out.get((left, right), 0) + c * m
    return {t: c for t, c in out.items() if c}


# -- antipode -----------------------------------------------------------------

@lru_cache(maxsize=1 << 12)
def antipode_terms(G: Multigraph) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """``(sign * a(G/F), F, blocks)`` for every flat ``F`` with ``a(G/F) != 0``.

    ``blocks`` is the vertex partition of ``F``; the graph ``(V, F)`` is the
    disjoint union of the induced subgraphs on those blocks.
    """
    out = []
    for F, blocks in flats_with_blocks(G):
        a = _quotient_acyclic_count(G, blocks)
        if a:
            sign = -1 if len(blocks) % 2 else 1  # n - rk(F) = number of blocks
            out.append((sign * a, F, blocks))
    return tuple(out)


def _quotient_acyclic_count(G: Multigraph, blocks: tuple[int, ...]) -> int:
    # G/F for a flat F is loopless; a() only needs its underlying simple graph
    where = {}
    for i, b in enumerate(blocks):
        v = 0
        while b:
            if b & 1:
                where[v] = i
            b >>= 1
            v += 1
    quotient = set()
    for u, v in G.edges:
        bu, bv = where[u], where[v]
        if bu != bv:
            quotient.add((min(bu, bv), max(bu, bv)))
    return count_acyclic_orientations(Multigraph(len(blocks), tuple(sorted(quotient))))


def antipode_flats(G: Multigraph) -> GraphSum:
    """``S(G)`` as a signed sum over flats weighted by acyclic-orientation counts."""
    return GraphSum(dict(_antipode_flats_cached(canonical_key(G))))


@lru_cache(maxsize=1 << 14)
def _antipode_flats_cached(key: bytes) -> tuple[tuple[bytes, Fraction], ...]:
    G = key_to_graph(key)
    out: dict[bytes, Fraction] = {}
    for coeff, F, _ in antipode_terms(G):
        k = canonical_key(Multigraph(G.n, tuple(e for i, e in enumerate(G.edges) if F >> i & 1)))
        out[k] = out.get(k, 0) + coeff
    return tuple(sorted((k, Fraction(c)) for k, c in out.items() if c))


def ordered_set_compositions(mask: int) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of nonempty disjoint masks whose union is ``mask``."""
    if not mask:
        yield ()
        return
    sub = mask
    while sub:
        for rest in ordered_set_compositions(mask & ~sub):
            yield (sub,) + rest
        sub = (sub - 1) & mask


def antipode_takeuchi(G: Multigraph) -> GraphSum:
    """``S(G) = sum over ordered set compositions pi of (-1)^|pi| G_pi``."""
    if G.n > TAKEUCHI_MAX_VERTICES:
        raise GraphSizeError(f"Takeuchi expansion limited to {TAKEUCHI_MAX_VERTICES} vertices")
    out: Counter = Counter()
    for comp in ordered_set_compositions(G.full_mask):
        # G_pi keeps exactly the edges lying inside one block
        keep = tuple(
            e for e in G.edges if any(b >> e[0] & 1 and b >> e[1] & 1 for b in comp)
        )
        out[canonical_key(Multigraph(G.n, keep))] += -1 if len(comp) % 2 else 1
    return GraphSum(out)


def antipode_recursive(G: Multigraph) -> GraphSum:
    """``S(G) = -sum_{T nonempty} G|T * S(G|T^c)``; only used as a cross-check."""
    return GraphSum(dict(_antipode_recursive_cached(canonical_key(G))))


@lru_cache(maxsize=1 << 12)
def _antipode_recursive_cached(key: bytes) -> tuple[tuple[bytes, Fraction], ...]:
    G = key_to_graph(key)
    if G.n == 0:
        return ((UNIT_KEY, Fraction(1)),)
    full = G.full_mask
    total = GraphSum()
    for T in range(1, 1 << G.n):
        rest = antipode_recursive(_induced(G, full ^ T))
        total = total - GraphSum.of(_induced(G, T)) * rest
    return tuple(sorted(total.terms.items()))


def antipode_linear(a: GraphSum) -> GraphSum:
    """Extend ``S`` linearly, computing it per connected component of each basis graph."""
    out = GraphSum()
    for k, c in a.terms.items():
        out = out + _antipode_of_key(k).scale(c)
    return out


@lru_cache(maxsize=1 << 14)
def _antipode_of_key(key: bytes) -> GraphSum:
    G = key_to_graph(key)
    result = GraphSum.unit()
    for part in connected_components(G):
        result = result * antipode_flats(part)
    return result


def hopf_axiom_check(G: Multigraph) -> bool:
    """Check ``m (S x I) Delta (G) == eps(G) K_0`` and the mirrored identity."""
    expected = GraphSum.unit() if G.n == 0 else GraphSum()
    left = GraphSum()
    right = GraphSum()
    for lk, rk, m in coproduct(G):
        L, R = GraphSum({lk: 1}), GraphSum({rk: 1})
        left = left + (antipode_linear(L) * R).scale(m)
        right = right + (L * antipode_linear(R)).scale(m)
    return left == expected and right == expected


def coassociativity_check(G: Multigraph) -> bool:
    """``(Delta x I) Delta G == (I x Delta) Delta G`` as multisets of key triples."""
    lhs: Counter = Counter()
    rhs: Counter = Counter()
    for lk, rk, m in coproduct(G):
        for a, b, m2 in coproduct(key_to_graph(lk)):
            lhs[a, b, rk] += m * m2
        for b, c, m2 in coproduct(key_to_graph(rk)):
            rhs[lk, b, c] += m * m2
    return lhs == rhs


def is_cocommutative(G: Multigraph) -> bool:
    terms = Counter({(left, right): m for left, right, m in coproduct(G)})
    return terms == Counter({(right, left): m for (left, right), m in terms.items()})
