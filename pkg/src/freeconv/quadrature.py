"""The quadrature sum and its verification for U_d, O_d and H_d^s.

For ``p : [k] -> [d]`` the quadrature sum is

    Σ_{σ ∈ S_k} sgn(σ) ∫_G Π_i u_{i p(i)} conj(u_{σ(i) p(i)}) dU

and a group has the quadrature property when it equals ``(d-k)!/d!`` for
injective ``p`` and ``0`` otherwise.  U_d and O_d are evaluated through the
Weingarten calculus; finite H_d^s by summing over every group element in
exact cyclotomic arithmetic; H_d^∞ by integrating the phases over the torus,
which keeps exactly the terms whose net phase exponents all vanish.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .combinatorics import sign_of_images
from .cyclotomic import Cyclotomic
from .errors import DimensionError, ResourceLimitError
from .finite_free import format_rational
from .weingarten import MAX_MOMENT_ORDER, haar_moment_orthogonal, haar_moment_unitary

UNITARY = "unitary"
ORTHOGONAL = "orthogonal"
SIGNED = "signed_permutation"
KINDS = (UNITARY, ORTHOGONAL, SIGNED)

#: Cap on group-element evaluations for the signed-permutation enumerations.
DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class GroupSpec:
    """One of U_d, O_d or H_d^s (``s`` an integer >= 2 or ``math.inf``)."""

    kind: str
    d: int
    s: int | float = 2

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.d < 1:
            raise DimensionError("d must be at least 1")
        if self.kind == SIGNED:
            if self.s != math.inf and (int(self.s) != self.s or self.s < 2):
                raise ValueError(f"root-of-unity order must be an integer >= 2 or inf, got {self.s}")

    @classmethod
    def parse(cls, text: str, d: int) -> "GroupSpec":
        """``"unitary"``, ``"orthogonal"``, ``"signed:3"`` or ``"signed:inf"``."""
        text = text.strip().lower()
        if text in (UNITARY, ORTHOGONAL):
            return cls(text, d)
        if text.startswith("signed:"):
            order = text.split(":", 1)[1]
            s = math.inf if order in ("inf", "infinity", "∞") else int(order)
            return cls(SIGNED, d, s)
        raise ValueError(f"cannot parse group {text!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == SIGNED and self.s != math.inf

    def order(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not a finite group")
        return int(self.s) ** self.d * factorial(self.d)

    def label(self) -> str:
        if self.kind == SIGNED:
            return "signed:" + ("inf" if self.s == math.inf else str(int(self.s)))
        return self.kind


class SignedPermutation(NamedTuple):
    """Matrix with entry ``ζ_s^{phases[r-1]}`` at ``(r, perm[r-1])`` and zeros elsewhere."""

    perm: tuple[int, ...]
    phases: tuple[int, ...]


def _check_budget(count: int, budget: int) -> None:
    if count > budget:
        raise ResourceLimitError(f"{count} group-element evaluations exceed the budget of {budget}")


def signed_group_enumerate(d: int, s: int, budget: int = DEFAULT_BUDGET) -> Iterator[SignedPermutation]:
    """Every element of H_d^s exactly once (``s^d d!`` of them)."""
    if s == math.inf or s < 2:
        raise ValueError("enumeration needs a finite s >= 2")
    s = int(s)
    _check_budget(s**d * factorial(d), budget)
    for perm in itertools.permutations(range(1, d + 1)):
        for phases in itertools.product(range(s), repeat=d):
            yield SignedPermutation(perm, phases)


def signed_matrix(g: SignedPermutation, s: int) -> list[list]:
    """The element as an exact matrix (ints for ``s = 2``, cyclotomics otherwise)."""
    d = len(g.perm)
    rows = []
    for r in range(d):
        row: list = [0] * d
        if s == 2:
            row[g.perm[r] - 1] = -1 if g.phases[r] else 1
        else:
            row[g.perm[r] - 1] = Cyclotomic.root(s, g.phases[r])
        rows.append(row)
    return rows


def _signed_permutations_of(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((im, sign_of_images(im)) for im in itertools.permutations(range(1, k + 1)))


@lru_cache(maxsize=None)
def _signed_sums_enumerated(d: int, s: int, k: int, budget: int) -> dict[tuple[int, ...], object]:
    """Quadrature sums for every ``p`` by summing over all of H_d^s.

    Each matrix row has one nonzero entry, so for a given element only the
    ``p`` inside the support of ``Π_i u_{i p(i)}`` can be nonzero; the rest
    are exactly zero and left out of the result.
    """
    perms = _signed_permutations_of(k)
    counts: dict[tuple[int, ...], dict[int, int]] = defaultdict(lambda: defaultdict(int))
    n = 0
    for g in signed_group_enumerate(d, s, budget):
        n += 1
        rows = [{g.perm[r]: g.phases[r]} for r in range(d)]
        for choice in itertools.product(*(rows[r].items() for r in range(k))):
            p = tuple(c for c, _ in choice)
            plain = sum(e for _, e in choice)
            for sigma, sgn in perms:
                phase = plain
                for x in range(k):
                    e = rows[sigma[x] - 1].get(p[x])
                    if e is None:
                        break
                    phase -= e
                else:
                    counts[p][phase % s] += sgn
    out = {}
    for p, by_phase in counts.items():
        value = Cyclotomic.from_exponents(s, by_phase) / n
        out[p] = value.to_rational() if value.is_rational() else value
    return out


@lru_cache(maxsize=None)
def _signed_sums_matched(d: int, k: int, modulus: int | None) -> dict[tuple[int, ...], Fraction]:
    """Quadrature sums with the phases integrated out symbolically.

    ``∫ Π_r ε_r^{n_r}`` over independent uniform phases is 1 when every
    ``n_r`` vanishes (modulo ``modulus``, or exactly for the full circle)
    and 0 otherwise, so only the permutation part is enumerated.
    """
    perms = _signed_permutations_of(k)
    totals: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for tau in itertools.permutations(range(1, d + 1)):
        col_of = {r + 1: tau[r] for r in range(d)}
        p = tuple(col_of[i] for i in range(1, k + 1))
        for sigma, sgn in perms:
            if any(col_of[sigma[x]] != p[x] for x in range(k)):
                continue
            net = defaultdict(int)
            for x in range(k):
                net[x + 1] += 1
                net[sigma[x]] -= 1
            if all((v % modulus == 0) if modulus else v == 0 for v in net.values()):
                totals[p] += sgn
    return {p: Fraction(v, factorial(d)) for p, v in totals.items() if v}


def torus_matched_sums(d: int, k: int, modulus: int | None = None) -> dict[tuple[int, ...], Fraction]:
    """Public view of the phase-matching evaluation (``modulus=None`` is s = ∞)."""
    return dict(_signed_sums_matched(d, k, modulus))


def signed_quadrature_sums(g: GroupSpec, k: int, budget: int = DEFAULT_BUDGET) -> dict[tuple[int, ...], object]:
    """Nonzero quadrature sums of H_d^s for all ``p : [k] -> [d]`` at once."""
    if g.kind != SIGNED:
        raise ValueError("signed_quadrature_sums needs a signed_permutation group")
    if not 0 <= k <= g.d:
        raise DimensionError(f"need 0 <= k <= d, got k={k}, d={g.d}")
    if g.is_finite:
        return dict(_signed_sums_enumerated(g.d, int(g.s), k, budget))
    _check_budget(factorial(g.d), budget)
    return torus_matched_sums(g.d, k, None)


def _interleave(sigma: Sequence[int]) -> tuple[int, ...]:
    return tuple(v for x, sx in enumerate(sigma, start=1) for v in (x, sx))


def quadrature_sum(g: GroupSpec, p: Sequence[int], budget: int = DEFAULT_BUDGET):
    """``Σ_σ sgn(σ) ∫_G Π_i u_{i p(i)} conj(u_{σ(i) p(i)}) dU`` exactly."""
    p = tuple(int(v) for v in p)
    k, d = len(p), g.d
    if k > d:
        raise DimensionError(f"quadrature needs k <= d, got k={k}, d={d}")
    if any(v < 1 or v > d for v in p):
        raise DimensionError(f"p={p} has entries outside 1..{d}")
    if k == 0:
        return Fraction(1)
    if g.kind == SIGNED:
        return signed_quadrature_sums(g, k, budget).get(p, Fraction(0))
    if k > MAX_MOMENT_ORDER:
        raise ResourceLimitError(f"Weingarten evaluation supported for k <= {MAX_MOMENT_ORDER}")
    rows = tuple(range(1, k + 1))
    total = Fraction(0)
    for sigma, sgn in _signed_permutations_of(k):
        if g.kind == UNITARY:
            m = haar_moment_unitary(d, rows, p, sigma, p)
        else:
            m = haar_moment_orthogonal(d, _interleave(sigma), tuple(v for v in p for _ in (0, 1)))
        total += sgn * m
    return total


def expected_quadrature_value(d: int, p: Sequence[int]) -> Fraction:
    """``(d-k)!/d!`` for injective ``p``, else 0."""
    if len(set(p)) == len(p):
        return Fraction(factorial(d - len(p)), factorial(d))
    return Fraction(0)


@dataclass
class QuadratureReport:
    group: str
    d: int
    k_max: int
    cases: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def failures(self) -> list[dict]:
        return [c for c in self.cases if not c["pass"]]

    def to_json(self) -> dict:
        return {
            "target": "quadrature",
            "group": self.group,
            "d": self.d,
            "k_max": self.k_max,
            "n_cases": len(self.cases),
            "pass": self.passed,
            "cases": self.cases,
        }


def _format_value(v) -> str:
    return format_rational(v) if isinstance(v, (int, Fraction)) else repr(v)


def _cases_for_k(g: GroupSpec, k: int, budget: int) -> list[dict]:
    cases = []
    for p in itertools.product(range(1, g.d + 1), repeat=k):
        value = quadrature_sum(g, p, budget)
        expected = expected_quadrature_value(g.d, p)
        cases.append(
            {
                "k": k,
                "p": list(p),
                "value": _format_value(value),
                "expected": format_rational(expected),
                "pass": value == expected,
            }
        )
    return cases


def verify_quadrature(g: GroupSpec, k_max: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> QuadratureReport:
    """Check the quadrature property for every ``k <= k_max`` and every ``p``."""
    if k_max > g.d:
        raise DimensionError(f"k_max={k_max} exceeds d={g.d}")
    report = QuadratureReport(g.label(), g.d, k_max)
    ks = list(range(k_max + 1))
    if threads > 1 and len(ks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_cases_for_k, [g] * len(ks), ks, [budget] * len(ks)))
    else:
        chunks = [_cases_for_k(g, k, budget) for k in ks]
    for chunk in chunks:
        report.cases.extend(chunk)
    return report
