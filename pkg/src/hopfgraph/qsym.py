"""Monomial quasisymmetric functions and the maps Psi (graphs to QSym) and Pi (QSym to Q[k]).

Products of monomial functions are never computed by a shuffle rule: both
factors are expanded as honest polynomials in enough commuting variables,
multiplied, and the monomial coefficients read back off.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterator, Mapping

from .characters import Character
from .multigraph import Multigraph, _induced
from .polynomial import Poly, Rational, falling_factorial

Composition = tuple[int, ...]


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``; the empty composition for ``n = 0``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def format_composition(alpha: Composition) -> str:
    return "(" + ",".join(map(str, alpha)) + ")"


class QSymElement:
    """Finite rational combination of monomial quasisymmetric functions ``M_alpha``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Composition, Rational] | None = None):
        self.terms: dict[Composition, Fraction] = {
            tuple(a): Fraction(c) for a, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def M(cls, alpha: Composition) -> QSymElement:
        return cls({tuple(alpha): 1})

    def __add__(self, other: QSymElement) -> QSymElement:
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return QSymElement(out)

    def scale(self, c: Rational) -> QSymElement:
        return QSymElement({a: c * v for a, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = QSymElement()
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                out = out + m_product(a, b).scale(ca * cb)
        return out

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, QSymElement) and self.terms == other.terms

    def homogeneous(self, n: int) -> QSymElement:
        return QSymElement({a: c for a, c in self.terms.items() if sum(a) == n})

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*M{format_composition(a)}" for a, c in sorted(self.terms.items()))
        return f"QSymElement({body or '0'})"

    def to_json(self) -> dict:
        return {
            "terms": [{"alpha": list(a), "coeff": str(c)} for a, c in sorted(self.terms.items())]
        }


# -- truncated power-series expansion ----------------------------------------

def m_expand(alpha: Composition, m: int) -> dict[tuple[int, ...], int]:
    """``M_alpha`` restricted to ``x_1..x_m``: exponent vector -> coefficient."""
    out = {}
    for idx in combinations(range(m), len(alpha)):
        exps = [0] * m
        for i, a in zip(idx, alpha):
            exps[i] = a
        out[tuple(exps)] = 1
    return out


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return out


def m_product(alpha: Composition, beta: Composition, m: int | None = None) -> QSymElement:
    """``M_alpha * M_beta`` recovered from a product of truncated expansions."""
    need = len(alpha) + len(beta)
    if m is None:
        m = need
    if m < need:
        raise ValueError(f"need at least {need} variables, got {m}")
    prod = _poly_mul(m_expand(alpha, m), m_expand(beta, m))
    out = {}
    for exps, c in prod.items():
        # the coefficient of M_gamma is the coefficient of x_1^g1 ... x_l^gl
        l = len(exps)
        while l and exps[l - 1] == 0:
            l -= 1
        gamma = exps[:l]
        if all(g > 0 for g in gamma):
            out[gamma] = c
    return QSymElement(out)


def m_coproduct(alpha: Composition) -> list[tuple[Composition, Composition]]:
    """Deconcatenation: ``l + 1`` pairs."""
    alpha = tuple(alpha)
    return [(alpha[:i], alpha[i:]) for i in range(len(alpha) + 1)]


def m_coassociativity_check(alpha: Composition) -> bool:
    lhs: Counter = Counter()
    rhs: Counter = Counter()
    for a, b in m_coproduct(alpha):
        for a1, a2 in m_coproduct(a):
            lhs[a1, a2, b] += 1
        for b1, b2 in m_coproduct(b):
            rhs[a, b1, b2] += 1
    return lhs == rhs


def zeta_q(q: QSymElement) -> Fraction:
    """Evaluate at ``x_1 = 1``, all other variables 0."""
    total = Fraction(0)
    for alpha, c in q.terms.items():
        total += c * sum(m_expand(alpha, 1).values())
    return total


# -- Psi and Pi ---------------------------------------------------------------

def zeta_alpha(zeta: Character, G: Multigraph, alpha: Composition) -> Fraction:
    """Sum over ordered vertex decompositions with block sizes ``alpha`` of the product of ``zeta`` on blocks."""
    if sum(alpha) != G.n:
        raise ValueError(f"composition weight {sum(alpha)} != n(G) = {G.n}")

    def rec(rest: int, i: int) -> Fraction:
        if i == len(alpha):
            return Fraction(1)
        verts = [v for v in range(G.n) if rest >> v & 1]
        total = Fraction(0)
        for block in combinations(verts, alpha[i]):
            mask = sum(1 << v for v in block)
            z = zeta(_induced(G, mask))
            if z:
                total += z * rec(rest & ~mask, i + 1)
        return total

    return rec(G.full_mask, 0)


def psi(G: Multigraph, zeta: Character) -> QSymElement:
    return QSymElement({alpha: zeta_alpha(zeta, G, alpha) for alpha in compositions(G.n)})


def binom_poly(l: int, var: str = "k") -> Poly:
    return falling_factorial(var, l) * Fraction(1, factorial(l))


def binom(t: Rational, l: int) -> Fraction:
    """Generalized binomial ``t(t-1)..(t-l+1)/l!``; 0 for negative ``l``."""
    if l < 0:
        return Fraction(0)
    return binom_poly(l)(t)


def pi(q: QSymElement) -> Poly:
    """Principal specialization ``M_alpha -> C(k, l(alpha))``."""
    out = Poly([])
    for alpha, c in q.terms.items():
        out = out + binom_poly(len(alpha)) * c
    return out


def vandermonde_check(l: int, xs, ys) -> bool:
    """``sum_j C(x, j) C(y, l-j) = C(x+y, l)`` on the grid."""
    return all(
        sum((binom(x, j) * binom(y, l - j) for j in range(l + 1)), Fraction(0)) == binom(x + y, l)
        for x in xs
        for y in ys
    )
