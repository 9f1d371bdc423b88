"""The three finite free convolutions on exact coefficient vectors.

A degree-``d`` polynomial is stored by its signed coefficients ``a_0..a_d``
with ``p(x) = Σ_k x^{d-k} (-1)^k a_k``, so a characteristic polynomial has
``a_k = e_k(eigenvalues)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Any, Iterable, Sequence

from .errors import DegreeMismatchError, DimensionError


def parse_rational(value: Any) -> Fraction:
    """``"3/4"``, ``"-2"``, ``5`` -> Fraction.  Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"expected an exact rational, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise ValueError(f"not a rational literal: {value!r}")


def format_rational(value) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class PolynomialFF:
    """``p(x) = Σ_{k=0}^d x^{d-k} (-1)^k a_k`` with exact rational ``a_k``."""

    d: int
    a: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        a = tuple(Fraction(c) for c in self.a)
        if self.d < 0 or len(a) != self.d + 1:
            raise DimensionError(f"need d+1={self.d + 1} coefficients, got {len(a)}")
        object.__setattr__(self, "a", a)

    @classmethod
    def monomial(cls, d: int) -> "PolynomialFF":
        """``x^d``."""
        return cls(d, (1,) + (0,) * d)

    @classmethod
    def from_raw(cls, raw: Sequence) -> "PolynomialFF":
        """From descending-power coefficients ``raw[k]`` of ``x^{d-k}``."""
        d = len(raw) - 1
        return cls(d, tuple((-1) ** k * Fraction(c) for k, c in enumerate(raw)))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "PolynomialFF":
        return char_poly_from_spectrum(SpectrumSpec(tuple(roots)))

    def raw(self) -> tuple[Fraction, ...]:
        return tuple((-1) ** k * c for k, c in enumerate(self.a))

    @property
    def is_monic(self) -> bool:
        return self.a[0] == 1

    def __call__(self, x):
        return sum(c * x ** (self.d - k) for k, c in enumerate(self.raw()))

    def to_json(self) -> dict:
        return {"d": self.d, "a": [format_rational(c) for c in self.a]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "PolynomialFF":
        """Accepts ``{"d": .., "a": [..]}`` or ``{"roots": [..]}`` (or its JSON text)."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise ValueError("polynomial JSON must be an object")
        if "roots" in obj:
            return cls.from_roots(parse_rational(r) for r in obj["roots"])
        if "d" not in obj or "a" not in obj:
            raise ValueError('polynomial JSON needs "d" and "a" (or "roots")')
        d = obj["d"]
        if not isinstance(d, int) or isinstance(d, bool):
            raise ValueError('"d" must be an integer')
        return cls(d, tuple(parse_rational(c) for c in obj["a"]))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.raw()):
            if c:
                power = self.d - k
                mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
                coef = "" if (c in (1, -1) and mono) else str(abs(c))
                terms.append(("- " if c < 0 else "+ ") + (coef + ("*" if coef and mono else "") + mono))
        text = " ".join(terms) or "0"
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class SpectrumSpec:
    """Eigenvalues (or, for the rectangular convolution, singular values) of a matrix."""

    eigenvalues: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", tuple(self.eigenvalues))

    @property
    def d(self) -> int:
        return len(self.eigenvalues)

    def squared(self) -> "SpectrumSpec":
        """Eigenvalues of ``AA*`` for ``A = diag(singular values)``."""
        return SpectrumSpec(tuple(v * v for v in self.eigenvalues))


def elementary_symmetric(k: int, values: Sequence):
    """``e_k(values)``: the sum of all products of ``k`` distinct entries."""
    n = len(values)
    if k < 0 or k > n:
        raise DimensionError(f"e_{k} undefined for {n} values")
    e = [1] + [0] * k
    for v in values:
        for t in range(k, 0, -1):
            e[t] = e[t] + v * e[t - 1]
    return e[k]


def elementary_symmetric_bruteforce(k: int, values: Sequence):
    """Same quantity by explicit enumeration of k-subsets (for cross-checks)."""
    return sum((prod(c, start=1) for c in combinations(values, k)), 0)


def char_poly_from_spectrum(spec: SpectrumSpec) -> PolynomialFF:
    vals = spec.eigenvalues
    return PolynomialFF(len(vals), tuple(elementary_symmetric(k, vals) for k in range(len(vals) + 1)))


@lru_cache(maxsize=None)
def additive_weight(d: int, i: int, j: int) -> Fraction:
    """``(d-i)!(d-j)! / (d!(d-i-j)!)``."""
    k = i + j
    return Fraction(factorial(d - i) * factorial(d - j), factorial(d) * factorial(d - k))


@lru_cache(maxsize=None)
def multiplicative_weight(d: int, k: int) -> Fraction:
    """``k!(d-k)!/d!``."""
    return Fraction(factorial(k) * factorial(d - k), factorial(d))


def _same_degree(p: PolynomialFF, q: PolynomialFF) -> int:
    if p.d != q.d:
        raise DegreeMismatchError(f"degree bounds differ: {p.d} vs {q.d}")
    return p.d


def box_plus(p: PolynomialFF, q: PolynomialFF) -> PolynomialFF:
    """Symmetric additive convolution ``p ⊞_d q``."""
    d = _same_degree(p, q)
    c = [
        sum((additive_weight(d, i, k - i) * p.a[i] * q.a[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(d + 1)
    ]
    return PolynomialFF(d, tuple(c))


def box_times(p: PolynomialFF, q: PolynomialFF) -> PolynomialFF:
    """Symmetric multiplicative convolution ``p ⊠_d q``."""
    d = _same_degree(p, q)
    return PolynomialFF(d, tuple(multiplicative_weight(d, k) * p.a[k] * q.a[k] for k in range(d + 1)))


def rect_plus(p: PolynomialFF, q: PolynomialFF) -> PolynomialFF:
    """Asymmetric additive convolution ``p ++_d q``.

    Meant for characteristic polynomials of ``AA*`` and ``BB*``; nonnegative
    roots are not checked.
    """
    d = _same_degree(p, q)
    c = [
        sum((additive_weight(d, i, k - i) ** 2 * p.a[i] * q.a[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(d + 1)
    ]
    return PolynomialFF(d, tuple(c))


CONVOLUTIONS = {"add": box_plus, "mult": box_times, "rect": rect_plus}
