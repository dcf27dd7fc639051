"""Convolution powers of Tutte characters versus direct Tutte evaluations.

Left-hand sides always come from convolution (``characters.power_values``);
right-hand sides from the memoized Tutte engine.  Every check evaluates the
identity pointwise on integer grids with exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .characters import power_values, rho, tau, tilde, bar
from .multigraph import (
    Multigraph,
    complete,
    components,
    contract,
    delete_edges,
    edgeless,
    is_connected,
    rank,
    _induced,
)
from .tutte import tutte


def rho_power(G: Multigraph, x, y, ks: Sequence[int]) -> dict[int, Fraction]:
    """``P_{x,y}(G; k) = rho_{x,y}^k(G)`` by convolution, for each ``k``."""
    return power_values(rho(x, y), G, list(ks))


def tutte_char_rhs(G: Multigraph, x, y, k) -> Fraction:
    """``k^c (x-1)^rk T_G((k+x-1)/(x-1), y)``."""
    x, y, k = Fraction(x), Fraction(y), Fraction(k)
    if x == 1:
        raise ValueError("x = 1 is a degenerate substitution")
    T = tutte(G)
    return k ** components(G) * (x - 1) ** rank(G) * T((k + x - 1) / (x - 1), y)


def tutte_char_failures(G, x_grid, y_grid, k_grid) -> Iterator[tuple]:
    for x, y in product(x_grid, y_grid):
        lhs = rho_power(G, x, y, k_grid)
        for k in k_grid:
            rhs = tutte_char_rhs(G, x, y, k)
            if lhs[k] != rhs:
                yield (x, y, k, lhs[k], rhs)


def tutte_char_identity_check(G: Multigraph, x_grid, y_grid, k_grid) -> bool:
    return next(tutte_char_failures(G, x_grid, y_grid, k_grid), None) is None


def coboundary_check(G: Multigraph, t_grid, k_grid) -> bool:
    """Diagonal case ``x = y = t``: Crapo's coboundary polynomial."""
    for t in t_grid:
        lhs = rho_power(G, t, t, k_grid)
        for k in k_grid:
            if lhs[k] != tutte_char_rhs(G, t, t, k):
                return False
    return True


def two_formula_check(G: Multigraph, y_grid, k_grid) -> bool:
    """``tau_{2,y}^k(G) = k^c T_G(k+1, y)``."""
    T = tutte(G)
    c = components(G)
    for y in y_grid:
        lhs = power_values(tau(2, y), G, list(k_grid))
        for k in k_grid:
            if lhs[k] != Fraction(k) ** c * T(k + 1, y):
                return False
    return True


def zero_formula_check(G: Multigraph, y_grid, k_grid) -> bool:
    """``(tilde tau_{0,y})^k(G) = k^c (-1)^rk T_G(1-k, y)``."""
    T = tutte(G)
    c, r = components(G), rank(G)
    for y in y_grid:
        lhs = power_values(tilde(tau(0, y)), G, list(k_grid))
        for k in k_grid:
            if lhs[k] != Fraction(k) ** c * (-1) ** r * T(1 - k, y):
                return False
    return True


def inverse_corollary_check(G: Multigraph, y_grid) -> bool:
    """``(tilde tau_{0,y})^{-1} = bar tau_{2,y}`` at ``G``."""
    return all(
        power_values(tilde(tau(0, y)), G, [-1])[-1] == bar(tau(2, y))(G) for y in y_grid
    )


def t32_identity(G: Multigraph) -> tuple[Fraction, Fraction]:
    """``(T_G(3, 2), sum_U 2^(e(G|U) + e(G|U^c) - 1))`` for connected ``G``."""
    if not is_connected(G):
        raise ValueError("t32 identity needs a connected graph")
    full = G.full_mask
    total = Fraction(0)
    for U in range(1 << G.n):
        total += Fraction(2) ** (_induced(G, U).e + _induced(G, full ^ U).e - 1)
    return tutte(G)(3, 2), total


def weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``k`` nonnegative integers summing to ``n``."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first,) + rest


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    out = factorial(sum(parts))
    for a in parts:
        out //= factorial(a)
    return out


def kn_multinomial_sum(n: int, k: int, weight) -> Fraction:
    """``(1/k) sum_{a_1+..+a_k=n} n!/(a_1!..a_k!) prod weight(a_i)``."""
    total = Fraction(0)
    for parts in weak_compositions(n, k):
        term = Fraction(multinomial(parts))
        for a in parts:
            term *= weight(a)
        total += term
    return total / k


def kn_power_identities(n: int, k: int, y) -> bool:
    """``T_{K_n}(k+1, y)`` against the multinomial sum, plus the closed forms at ``y = 0, 2``."""
    if k < 1:
        raise ValueError("k must be positive")
    y = Fraction(y)
    T_val = tutte(complete(n))(k + 1, y)
    tau_Ka = {a: tutte(complete(a))(2, y) for a in range(n + 1)}
    ok = T_val == kn_multinomial_sum(n, k, tau_Ka.__getitem__)
    if y == 0:
        ok &= T_val == Fraction(factorial(n + k - 1), factorial(k))
    if y == 2:
        ok &= T_val == kn_multinomial_sum(n, k, lambda a: Fraction(2) ** comb(a, 2))
    return ok


def tau_kn_power_check(n: int, k: int, x, y) -> bool:
    """``(x-1)^(k-1) T_{K_n}((k+x-1)/(x-1), y) = k^{-1} tau_{x/(x-1),y}^k(K_n)``."""
    x, y = Fraction(x), Fraction(y)
    lhs = (x - 1) ** (k - 1) * tutte(complete(n))((k + x - 1) / (x - 1), y)
    rhs = power_values(tau(x / (x - 1), y), complete(n), [k])[k] / k
    return lhs == rhs


def tau_kn_power_corrected(n: int, k: int, x, y) -> bool:
    """Same expansion as above, keeping empty blocks: ``K_0`` has rank 0, not -1.

    ``k (x-1)^(n-1) T_{K_n}((k+x-1)/(x-1), y)`` equals the multinomial sum of
    ``prod_i (x-1)^max(a_i - 1, 0) tau_{x/(x-1),y}(K_{a_i})``.
    """
    x, y = Fraction(x), Fraction(y)
    lhs = k * (x - 1) ** (n - 1) * tutte(complete(n))((k + x - 1) / (x - 1), y)
    tau_K = {a: (x - 1) ** max(a - 1, 0) * tutte(complete(a))(x / (x - 1), y) for a in range(n + 1)}
    return lhs == k * kn_multinomial_sum(n, k, tau_K.__getitem__)


def tutte_from_P(G: Multigraph, x_grid, y_grid, k_grid=(1, 2, -1)) -> bool:
    """Recover ``T_G(x, y)`` from coloured powers in three ways."""
    T = tutte(G)
    n, c, r = G.n, components(G), rank(G)
    for x, y in product(x_grid, y_grid):
        x, y = Fraction(x), Fraction(y)
        if x == 1:
            raise ValueError("x grid must exclude 1")
        target = T(x, y)
        # (x-1)^{-c} P_{2,y}(G; x-1) with x-1 an integer power
        if (x - 1).denominator == 1:
            kk = int(x - 1)
            if (x - 1) ** (-c) * rho_power(G, 2, y, [kk])[kk] != target:
                return False
            # from P_{0,y}(G; k) = k^c (-1)^rk T(1-k, y) at k = 1-x; the exponent of (x-1) is -c
            kk = int(1 - x)
            if (-1) ** n * (x - 1) ** (-c) * rho_power(G, 0, y, [kk])[kk] != target:
                return False
        for k in k_grid:
            if k == 0:
                continue
            val = rho_power(G, (k + x - 1) / (x - 1), y, [k])[k]
            if Fraction(k) ** (-n) * (x - 1) ** r * val != target:
                return False
    return True


def limit_x1_check(G: Multigraph, y_grid, k_grid) -> bool:
    """``rho_{1,y}^k(G) = k^n(G) y^loops(G)`` by direct convolution.

    ``R_H(1, y) = y^loops(H)``, so every block of a decomposition carries its
    own loops; for loopless ``G`` this is the plain ``k^n(G)``.
    """
    loops = G.loop_count()
    for y in y_grid:
        vals = rho_power(G, 1, y, k_grid)
        if any(vals[k] != Fraction(k) ** G.n * Fraction(y) ** loops for k in k_grid):
            return False
    return True


# -- recipe rules for P_{x,y}(G; k) ------------------------------------------

def recipe_points(count: int = 20) -> list[tuple[Fraction, Fraction, int]]:
    """A fixed set of ``(x, y, k)`` points with ``k != 0`` and ``x != 1``."""
    xs = [Fraction(-1), Fraction(0), Fraction(2), Fraction(3), Fraction(1, 2)]
    ys = [Fraction(-1), Fraction(2)]
    ks = [1, 2, -1, 3]
    pts = [(x, y, k) for x in xs for y in ys for k in ks]
    return pts[::max(1, len(pts) // count)][:count]


def _P(G: Multigraph, x, y, k) -> Fraction:
    return rho_power(G, x, y, [k])[k]


def recipe_edgeless_check(n: int, points) -> bool:
    G = edgeless(n)
    return all(_P(G, x, y, k) == Fraction(k) ** n for x, y, k in points)


def recipe_loop_check(G: Multigraph, loop: int, points) -> bool:
    u, v = G.edges[loop]
    if u != v:
        raise ValueError("edge is not a loop")
    H = delete_edges(G, [loop])
    return all(_P(G, x, y, k) == y * _P(H, x, y, k) for x, y, k in points)


def recipe_deletion_contraction_check(G: Multigraph, edge: int, points) -> bool:
    u, v = G.edges[edge]
    if u == v:
        raise ValueError("edge is a loop")
    D, C = delete_edges(G, [edge]), contract(G, [edge])
    return all(
        _P(G, x, y, k) == _P(D, x, y, k) + (x - 1) * _P(C, x, y, k) for x, y, k in points
    )


def recipe_cut_edge_check(G: Multigraph, edge: int, points) -> bool:
    D = delete_edges(G, [edge])
    if components(D) == components(G):
        raise ValueError("edge is not a cut-edge")
    return all(
        _P(G, x, y, k) == (k + x - 1) / Fraction(k) * _P(D, x, y, k) for x, y, k in points
    )
