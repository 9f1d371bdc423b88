"""Exact arithmetic in the cyclotomic field Q(ζ_s), ζ_s = exp(2πi/s).

Elements are coefficient vectors in the power basis ``1, ζ, ..., ζ^{φ(s)-1}``,
kept reduced modulo the cyclotomic polynomial Φ_s so that equality is
coefficientwise.  Only what the signed-permutation enumerations need is
here: ring operations, complex conjugation and division by rationals.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (low degree first), ``den`` monic."""
    num = num[:]
    q = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        q[shift] = c
        if c:
            for i, dc in enumerate(den):
                num[shift + i] -= c * dc
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(s: int) -> tuple[int, ...]:
    """Integer coefficients of Φ_s, lowest degree first."""
    poly = [-1] + [0] * (s - 1) + [1]
    for d in range(1, s):
        if s % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(s: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of ζ^m for m = 0..s-1."""
    phi = cyclotomic_polynomial(s)
    deg = len(phi) - 1
    table = []
    for m in range(s):
        mono = [0] * m + [1]
        if m >= deg:
            _, rem = _poly_divmod(mono, list(phi))
        else:
            rem = mono + [0] * (deg - m - 1)
        table.append(tuple(rem[:deg] + [0] * (deg - len(rem))))
    return tuple(table)


class Cyclotomic:
    """An element of Q(ζ_s).

    Coefficients stay Python ints while the arithmetic allows it and become
    Fractions only after a division that is not exact.
    """

    __slots__ = ("s", "coeffs")

    def __init__(self, s: int, coeffs):
        self.s = s
        self.coeffs = tuple(coeffs)

    @classmethod
    def root(cls, s: int, m: int = 1) -> "Cyclotomic":
        """ζ_s^m."""
        return cls(s, _power_table(s)[m % s])

    @classmethod
    def from_exponents(cls, s: int, counts: dict[int, Fraction | int]) -> "Cyclotomic":
        """``Σ_m counts[m] ζ^m``."""
        table = _power_table(s)
        acc = [0] * len(table[0])
        for m, c in counts.items():
            if c:
                for i, t in enumerate(table[m % s]):
                    if t:
                        acc[i] += c * t
        return cls(s, acc)

    @classmethod
    def rational(cls, s: int, value) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(s)) - 1
        return cls(s, [value] + [0] * (deg - 1))

    def _lift(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.s != self.s:
                raise ValueError(f"mixing Q(ζ_{self.s}) and Q(ζ_{other.s})")
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.rational(self.s, other)
        return NotImplemented

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coeffs[0])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return self
            return Cyclotomic(self.s, (self.coeffs[0] + other,) + self.coeffs[1:])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.s, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.s, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            return self + (-other)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.s, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Cyclotomic(self.s, [a * other for a in self.coeffs])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = len(self.coeffs)
        full = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        full[i + j] += a * b
        out = full[:n]
        if n > 1:
            table = _power_table(self.s)
            for m in range(n, 2 * n - 1):
                c = full[m]
                if c:
                    for i, t in enumerate(table[m % self.s]):
                        if t:
                            out[i] += c * t
        return Cyclotomic(self.s, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if all(isinstance(a, int) and a % other == 0 for a in self.coeffs):
                return Cyclotomic(self.s, [a // other for a in self.coeffs])
            return Cyclotomic(self.s, [Fraction(a) / other for a in self.coeffs])
        if isinstance(other, Rational):
            return Cyclotomic(self.s, [Fraction(a) / other for a in self.coeffs])
        return NotImplemented

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, ζ -> ζ^{-1}."""
        return Cyclotomic.from_exponents(self.s, {-i: a for i, a in enumerate(self.coeffs)})

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.s, self.coeffs))

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.s)
        return sum((complex(c) * z**i for i, c in enumerate(self.coeffs)), 0j)

    def __repr__(self) -> str:
        terms = [f"{c}*ζ^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic({self.s}: {' + '.join(terms) or '0'})"


def conj(x):
    """Complex conjugate of an exact number (identity on rationals)."""
    if isinstance(x, Cyclotomic):
        return x.conjugate()
    return x


def as_exact_rational(x) -> Fraction:
    """Collapse a cyclotomic value known to be rational; rationals pass through."""
    if isinstance(x, Cyclotomic):
        return x.to_rational()
    return Fraction(x)
