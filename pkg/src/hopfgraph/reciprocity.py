"""Identities for the characters ``xi_c(G) = c^n(G)`` and their interplay with ``zeta`` on complete graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .characters import alpha, bar, convolve, inverse_via_flats, is_acyclic, power, xi, zeta
from .multigraph import Multigraph, complete, cycle, _induced
from .polynomial import Rational

A009775_PREFIX = (-1, 1, 0, -6, 30, -90, 0, 2520, -22680, 113400, 0, -7484400)


@dataclass(frozen=True)
class Series:
    """Truncated power series ``c_0 + c_1 x + ... + c_N x^N``."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, N: int) -> Series:
        return cls((Fraction(1),) + (Fraction(0),) * N)

    @classmethod
    def exp(cls, c: Rational, N: int) -> Series:
        """``e^(c x)``."""
        c = Fraction(c)
        return cls(tuple(c**n / factorial(n) for n in range(N + 1)))

    @classmethod
    def one_plus_x_power(cls, k: int, N: int) -> Series:
        """``(1 + x)^k``; negative ``k`` inverts the geometric series."""
        if k >= 0:
            return cls(tuple(Fraction(comb(k, n)) for n in range(N + 1)))
        geometric = cls(tuple(Fraction((-1) ** n) for n in range(N + 1)))
        return geometric ** (-k)

    def __mul__(self, other: Series) -> Series:
        N = min(self.order, other.order)
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            a = self.coeffs[i]
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return Series(tuple(out))

    def __pow__(self, e: int) -> Series:
        if e < 0:
            raise ValueError("use one_plus_x_power for negative exponents")
        out = Series.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def egf_values(self) -> list[Fraction]:
        """``n! [x^n]`` for each ``n``."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


def zeta_power_xi(k: int, c: Rational, G: Multigraph) -> Fraction:
    """``(zeta^k * xi_c)(G)`` by convolution."""
    return convolve(power(zeta(), k), xi(c))(G)


def reciprocity_closed_form(n: int, m: int) -> int:
    return sum(comb(m, j) * comb(n, j) * factorial(j) for j in range(min(n, m) + 1))


def reciprocity_check(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``(zeta^n * xi_1)(K_m) = (zeta^m * xi_1)(K_n)``."""
    return zeta_power_xi(n, 1, complete(m)), zeta_power_xi(m, 1, complete(n))


def signed_reciprocity_check(n: int, m: int) -> bool:
    lhs = zeta_power_xi(n, -1, complete(m))
    rhs = zeta_power_xi(m, -1, complete(n))
    return lhs == (-1) ** (n + m) * rhs


def derangements(n: int) -> int:
    """``D_n = (n-1)(D_{n-1} + D_{n-2})``."""
    d = [1, 0]
    for i in range(2, n + 1):
        d.append((i - 1) * (d[-1] + d[-2]))
    return d[n]


def arrangements(n: int) -> int:
    """``A_n = n A_{n-1} + 1``."""
    a = 1
    for i in range(1, n + 1):
        a = i * a + 1
    return a


def derangement_check(n_max: int) -> bool:
    for n in range(n_max + 1):
        K = complete(n)
        if zeta_power_xi(-1, 1, K) != (-1) ** n * derangements(n):
            return False
        if zeta_power_xi(-1, -1, K) != (-1) ** n * arrangements(n):
            return False
    return True


def egf_series(c: Rational, k: int, N: int) -> Series:
    return Series.exp(c, N) * Series.one_plus_x_power(k, N)


def egf_check(c: Rational, k: int, n_max: int) -> bool:
    """``n! [x^n] e^(cx)(1+x)^k = (zeta^k * xi_c)(K_n)`` for ``n <= n_max``."""
    target = egf_series(c, k, n_max).egf_values()
    return all(zeta_power_xi(k, c, complete(n)) == target[n] for n in range(n_max + 1))


def a009775_closed_form(n: int) -> int:
    total = 0
    for m in range(n // 2 + 1):
        matchings = factorial(n) // (2**m * factorial(n - 2 * m) * factorial(m))
        total += (-1) ** (n - m) * matchings * factorial(n - m)
    return total


def a009775_check(n_max: int) -> bool:
    """``alpha^{-1}(K_n)`` through the flats formula, the closed form, and the listed prefix."""
    for n in range(1, n_max + 1):
        listed = A009775_PREFIX[n - 1]
        if a009775_closed_form(n) != listed:
            return False
        if inverse_via_flats(is_acyclic, complete(n)) != listed:
            return False
    return all(a009775_closed_form(n) == A009775_PREFIX[n - 1] for n in range(1, len(A009775_PREFIX) + 1))


def cocliques(G: Multigraph) -> list[int]:
    """Vertex masks of independent sets; a looped vertex is never independent."""
    out = []
    for Q in range(1 << G.n):
        if _induced(G, Q).e == 0:
            out.append(Q)
    return out


def coclique_sum(G: Multigraph, c: Rational) -> Fraction:
    """``sum over cocliques Q of c^(n - |Q|)``."""
    c = Fraction(c)
    return sum((c ** (G.n - bin(Q).count("1")) for Q in cocliques(G)), Fraction(0))


def xi_subgroup_check(G: Multigraph, c: Rational, d: Rational, k: int) -> bool:
    """``xi_c * xi_d = xi_{c+d}``, ``xi_c^k = xi_{ck}``, ``xi_c^{-1} = xi_{-c}``."""
    c, d = Fraction(c), Fraction(d)
    return (
        convolve(xi(c), xi(d))(G) == xi(c + d)(G)
        and power(xi(c), k)(G) == xi(c * k)(G)
        and power(xi(c), -1)(G) == xi(-c)(G) == bar(xi(c))(G)
    )


def alpha_cycle_value(n: int) -> Fraction:
    return power(alpha(), -1)(cycle(n))
