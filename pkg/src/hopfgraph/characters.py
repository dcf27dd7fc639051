"""Characters of the graph algebra and their convolution group.

A :class:`Character` evaluates a multigraph to an exact rational.  Every
character can also produce a *table* for a host graph ``G``: the list of its
values on the induced subgraphs ``G|S`` indexed by vertex mask ``S``.
Convolution on a host is subset convolution of tables, which makes powers
cheap (``O(3^n)`` per multiplication).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .hopf import GraphSum, antipode_terms
from .matroid import count_acyclic_orientations, flats, rank_of
from .multigraph import (
    Multigraph,
    canonical_key,
    contract,
    format_graph,
    is_connected,
    key_to_graph,
    parse_graph,
    rank,
    star,
    underlying_simple,
    _induced,
)
from .polynomial import Poly, Rational, interpolate
from .tutte import rank_nullity_from_tutte, tutte

Table = list


@dataclass(eq=False)
class Character:
    name: str
    params: tuple = ()
    func: Optional[Callable[[Multigraph], Rational]] = None
    table_func: Optional[Callable[[Multigraph], Table]] = None
    memoize: bool = False
    member: Optional[Callable[[Multigraph], bool]] = None
    _memo: dict = field(default_factory=dict, repr=False)

    def __call__(self, G: Multigraph) -> Fraction:
        if self.func is None:
            return Fraction(self.table(G)[-1])
        if not self.memoize:
            return Fraction(self.func(G))
        key = canonical_key(G)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo.setdefault(key, Fraction(self.func(key_to_graph(key))))
        return hit

    def table(self, G: Multigraph) -> Table:
        """Values on every induced subgraph of ``G``, indexed by vertex mask."""
        if self.table_func is not None:
            return self.table_func(G)
        return [self(_induced(G, S)) for S in range(1 << G.n)]

    def on(self, a: GraphSum) -> Fraction:
        """Linear extension to graph sums."""
        return sum((c * self(key_to_graph(k)) for k, c in a.terms.items()), Fraction(0))

    def __mul__(self, other: Character) -> Character:
        return convolve(self, other)

    def __pow__(self, k: int) -> Character:
        return power(self, k)

    def __repr__(self) -> str:
        return f"Character({self.name})"


def subset_convolve(f: Sequence, g: Sequence) -> Table:
    """``h[S] = sum_{T subset S} f[T] g[S - T]``."""
    out = []
    for S in range(len(f)):
        acc = 0
        T = S
        while True:
            a = f[T]
            if a:
                b = g[S ^ T]
                if b:
                    acc += a * b
            if T == 0:
                break
            T = (T - 1) & S
        out.append(acc)
    return out


def _eps_table(n: int) -> Table:
    return [Fraction(1)] + [Fraction(0)] * ((1 << n) - 1)


# -- built-in characters ------------------------------------------------------

def zeta() -> Character:
    """1 on graphs with no edges (a loop counts as an edge), else 0."""
    return Character("zeta", (), lambda G: 1 if G.e == 0 else 0)


def eps() -> Character:
    return Character("eps", (), lambda G: 1 if G.n == 0 else 0)


def xi(c: Rational) -> Character:
    c = Fraction(c)
    return Character(f"xi:{c}", (c,), lambda G: c**G.n)


def tau(x: Rational, y: Rational) -> Character:
    """Tutte character ``G -> T_G(x, y)``."""
    x, y = Fraction(x), Fraction(y)
    return Character(f"tau:{x},{y}", (x, y), lambda G: tutte(G)(x, y), memoize=True)


def rho(x: Rational, y: Rational) -> Character:
    """Rank-nullity character ``G -> R_G(x, y)``."""
    x, y = Fraction(x), Fraction(y)
    return Character(f"rho:{x},{y}", (x, y), lambda G: rank_nullity_from_tutte(G)(x, y), memoize=True)


def psi_omega(name: str, member: Callable[[Multigraph], bool]) -> Character:
    """Indicator of a family closed under (and detected by) disjoint union."""
    return Character(name, (), lambda G: 1 if member(G) else 0, memoize=True, member=member)


def is_acyclic(G: Multigraph) -> bool:
    """No cycles at all: loops and parallel pairs count as cycles."""
    return G.e == rank(G)


def alpha() -> Character:
    return psi_omega("alpha", is_acyclic)


def edgeless_family() -> Character:
    return psi_omega("edgeless", lambda G: G.e == 0)


def contains_subgraph(G: Multigraph, H: Multigraph) -> bool:
    """Whether the simple graph underlying ``G`` (loops dropped) has a subgraph isomorphic to ``H``."""
    S = underlying_simple(G)
    if H.n > S.n or H.e > S.e:
        return False
    if H.n == 0:
        return True
    adjG = [set() for _ in range(S.n)]
    for u, v in S.edges:
        adjG[u].add(v)
        adjG[v].add(u)
    adjH = [set() for _ in range(H.n)]
    for u, v in H.edges:
        adjH[u].add(v)
        adjH[v].add(u)
    # order H's vertices so each one (after the first) touches an earlier one
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        for w in sorted(adjH[order[i]]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    order += [v for v in range(H.n) if v not in seen]
    degH = [len(a) for a in adjH]
    degG = [len(a) for a in adjG]
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        h = order[pos]
        placed = [image[w] for w in adjH[h] if w in image]
        if placed:
            candidates = set.intersection(*(adjG[p] for p in placed))
        else:
            candidates = set(range(S.n))
        for g in sorted(candidates - used):
            if degG[g] < degH[h]:
                continue
            image[h] = g
            used.add(g)
            if extend(pos + 1):
                return True
            del image[h]
            used.discard(g)
        return False

    return extend(0)


def eta(H: Multigraph) -> Character:
    """Avoidance character of a connected simple graph ``H``."""
    if H.n == 0 or not is_connected(H):
        raise ValueError("avoidance character needs a connected graph H")
    if H.has_loop() or underlying_simple(H).e != H.e:
        raise ValueError("avoidance character needs a simple graph H")
    return psi_omega(f"eta:{format_graph(H)}", lambda G: not contains_subgraph(G, H))


def bar(phi: Character) -> Character:
    """``G -> (-1)^n(G) phi(G)``."""
    return Character(
        f"bar({phi.name})",
        phi.params,
        table_func=lambda G: [
            -v if bin(S).count("1") % 2 else v for S, v in enumerate(phi.table(G))
        ],
    )


def tilde(phi: Character) -> Character:
    """``G -> (-1)^rk(G) phi(G)``."""
    return Character(
        f"tilde({phi.name})",
        phi.params,
        table_func=lambda G: [
            -v if rank(_induced(G, S)) % 2 else v for S, v in enumerate(phi.table(G))
        ],
    )


# -- group operations ---------------------------------------------------------

def convolve(phi: Character, psi: Character) -> Character:
    """``(phi * psi)(G) = sum_T phi(G|T) psi(G|T^c)``."""
    return Character(
        f"({phi.name})*({psi.name})",
        (),
        table_func=lambda G: subset_convolve(phi.table(G), psi.table(G)),
    )


def _power_table(base: Table, k: int, n: int) -> Table:
    result = _eps_table(n)
    while k:
        if k & 1:
            result = subset_convolve(result, base)
        k >>= 1
        if k:
            base = subset_convolve(base, base)
    return result


def inverse(phi: Character) -> Character:
    """``phi o S``, with ``S`` expanded by the flats formula.

    Each term ``(V, F)`` is the disjoint union of the induced subgraphs on
    the blocks of ``F``, so ``phi`` is evaluated blockwise.
    """

    def value(G: Multigraph) -> Fraction:
        cache: dict[int, Fraction] = {}
        total = Fraction(0)
        for coeff, _, blocks in antipode_terms(G):
            prod = Fraction(coeff)
            for b in blocks:
                v = cache.get(b)
                if v is None:
                    v = cache[b] = phi(_induced(G, b))
                prod *= v
                if not prod:
                    break
            total += prod
        return total

    return Character(f"({phi.name})^-1", phi.params, value, memoize=True)


def power(phi: Character, k: int) -> Character:
    """``k``-th convolution power; negative ``k`` goes through the antipode."""
    if k == 0:
        return eps()
    if k == 1:
        return phi
    base = phi if k > 0 else inverse(phi)
    if k == -1:
        return base
    m = abs(k)
    return Character(
        f"({phi.name})^{k}",
        phi.params,
        table_func=lambda G: _power_table(base.table(G), m, G.n),
    )


def power_values(phi: Character, G: Multigraph, ks: Sequence[int]) -> dict[int, Fraction]:
    """``phi^k(G)`` for several ``k`` sharing one table of ``phi`` (and of its inverse)."""
    out: dict[int, Fraction] = {}
    full = (1 << G.n) - 1
    for sign, base_char in ((1, phi), (-1, None)):
        wanted = sorted(abs(k) for k in ks if (k > 0 if sign > 0 else k < 0))
        if not wanted:
            continue
        base = (base_char or inverse(phi)).table(G)
        cur, have = base, 1
        for m in wanted:
            while have < m:
                cur = subset_convolve(cur, base)
                have += 1
            out[sign * m] = Fraction(cur[full])
    if 0 in ks:
        out[0] = Fraction(1 if G.n == 0 else 0)
    return out


def poly_in_k(phi: Character, G: Multigraph) -> Poly:
    """The polynomial ``P(k)`` with ``P(k) = phi^k(G)`` for all integers ``k``."""
    nodes = list(range(G.n + 1))
    vals = power_values(phi, G, nodes)
    return interpolate(nodes, [vals[k] for k in nodes])


def inverse_via_flats(member: Callable[[Multigraph], bool], G: Multigraph) -> Fraction:
    """``psi_Omega^{-1}(G)``: signed acyclic-orientation counts over flats ``F`` with ``(V, F)`` in Omega."""
    total = 0
    for F in flats(G):
        spanning = Multigraph(G.n, tuple(e for i, e in enumerate(G.edges) if F >> i & 1))
        if member(spanning):
            sign = -1 if (G.n - rank_of(G, F)) % 2 else 1
            total += sign * count_acyclic_orientations(contract(G, F))
    return Fraction(total)


def degree_chromatic(G: Multigraph, m: int) -> Poly:
    """Colourings in which every colour class has maximum degree below ``m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return poly_in_k(eta(star(m)), G)


def tree_avoidance_inverse(T: Multigraph, H: Multigraph) -> Fraction:
    """``eta_H^{-1}(T) = -sum (-2)^(r - |F|)`` over ``H``-free spanning forests ``F`` of the tree ``T``."""
    if T.n == 0 or T.e != T.n - 1 or not is_connected(T):
        raise ValueError("input is not a tree")
    r = T.n - 1
    total = 0
    for F in range(1 << T.e):
        sub = Multigraph(T.n, tuple(e for i, e in enumerate(T.edges) if F >> i & 1))
        if not contains_subgraph(sub, H):
            total += (-2) ** (r - bin(F).count("1"))
    return Fraction(-total)


def self_avoidance_poly(G: Multigraph) -> Poly:
    """``P_{eta_G}(G; k)``; equals ``k^n - k`` for connected ``G`` with ``n >= 2``."""
    if G.n < 2 or not is_connected(G):
        raise ValueError("needs a connected graph with at least two vertices")
    return poly_in_k(eta(underlying_simple(G)), G)


def builtin(name: str, *params) -> Character:
    """Character by family name: zeta, eps, xi, tau, rho, alpha, eta, edgeless."""
    if name == "zeta":
        return zeta()
    if name == "eps":
        return eps()
    if name == "alpha":
        return alpha()
    if name == "edgeless":
        return edgeless_family()
    if name == "xi":
        (c,) = params
        return xi(c)
    if name == "tau":
        x, y = params
        return tau(x, y)
    if name == "rho":
        x, y = params
        return rho(x, y)
    if name == "eta":
        (H,) = params
        return eta(H)
    raise ValueError(f"unknown character {name!r}")


def parse_character(spec: str) -> Character:
    """Parse ``zeta``, ``eps``, ``alpha``, ``xi:c``, ``tau:x,y``, ``rho:x,y``, ``eta:<graph>``,
    optionally wrapped as ``bar:<spec>`` or ``tilde:<spec>``."""
    s = spec.strip()
    for prefix, wrap in (("bar:", bar), ("tilde:", tilde)):
        if s.startswith(prefix):
            return wrap(parse_character(s[len(prefix):]))
    name, _, rest = s.partition(":")
    if name in ("zeta", "eps", "alpha", "edgeless") and not rest:
        return builtin(name)
    if name == "eta" and rest:
        return builtin("eta", parse_graph(rest))
    if name in ("xi", "tau", "rho") and rest:
        try:
            vals = [Fraction(t.strip()) for t in rest.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad character parameters in {spec!r}") from exc
        if len(vals) != (1 if name == "xi" else 2):
            raise ValueError(f"wrong parameter count in {spec!r}")
        return builtin(name, *vals)
    raise ValueError(f"cannot parse character {spec!r}")
