"""Exact-rational polynomials: univariate (in ``k``) and bivariate (in ``x, y``).

Both types are immutable and hashable.  Coefficients are ``Fraction``;
plain ``int`` operands are promoted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Rational] = (), var: str = "k"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def gen(cls, var: str = "k") -> Poly:
        return cls([0, 1], var)

    @classmethod
    def const(cls, c: Rational, var: str = "k") -> Poly:
        return cls([c], var)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, value: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly([1], self.var), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: Poly) -> Poly:
        """``self(inner)`` by Horner's rule."""
        acc = Poly([], inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other], self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> dict:
        return {
            "terms": [
                {self.var: i, "coeff": str(c)}
                for i, c in sorted(enumerate(self.coeffs), reverse=True)
                if c
            ]
        }


def interpolate(xs: Sequence[Rational], ys: Sequence[Rational], var: str = "k") -> Poly:
    """Lagrange interpolation through the points ``(xs[i], ys[i])``."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Poly([], var)
    t = Poly.gen(var)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Poly([1], var)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * (t - xj)
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result


def falling_factorial(var: str = "k", n: int = 0) -> Poly:
    """``k (k-1) ... (k-n+1)``."""
    out = Poly([1], var)
    for i in range(n):
        out = out * Poly([-i, 1], var)
    return out


class BivarPoly:
    """Sparse polynomial in ``x`` and ``y``: maps ``(i, j)`` to the coefficient of ``x^i y^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Rational] | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {
            ij: _frac(c) for ij, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def const(cls, c: Rational) -> BivarPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BivarPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivarPoly:
        return cls({(0, 1): 1})

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __call__(self, x: Rational, y: Rational) -> Fraction:
        x, y = _frac(x), _frac(y)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for ij, c in other.terms.items():
            out[ij] = out.get(ij, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BivarPoly:
        return BivarPoly({ij: -c for ij, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivarPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = BivarPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BivarPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                p for p in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if p
            )
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"x": i, "y": j, "coeff": str(c)}
                for (i, j), c in sorted(self.terms.items(), reverse=True)
            ]
        }
