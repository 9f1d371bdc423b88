"""Exact Weingarten functions of U_d and O_d and the Haar moments they give.

Unitary values are keyed by the cycle type of ``π^{-1}σ``; orthogonal values
by the coset type of ``π^{-1}σ`` with pair partitions embedded in S_2k.  Both
tables sum over every ``λ ⊢ k``, which is the full sum because ``k ≤ d`` is
enforced up front.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .characters import (
    character_value,
    dimension,
    schur_principal_value,
    zonal_principal_value,
    zonal_value,
)
from .combinatorics import (
    Partition,
    compose_images,
    coset_type_tuple,
    cycle_type_tuple,
    inverse_images,
    kernel_of,
    pairing_images,
    pairings_below,
    partitions_of,
)
from .errors import DimensionError, ResourceLimitError

#: Moments enumerate S_k x S_k or P_2(2k) x P_2(2k); beyond this it is too slow.
MAX_MOMENT_ORDER = 6

UNITARY = "unitary"
ORTHOGONAL = "orthogonal"


@dataclass(frozen=True)
class WeingartenTable:
    group: str
    k: int
    d: int
    values: dict[Partition, Fraction] = field(repr=False)

    def __getitem__(self, rho: Partition) -> Fraction:
        return self.values[rho]

    @property
    def by_parts(self) -> dict[tuple[int, ...], Fraction]:
        return {rho.parts: v for rho, v in self.values.items()}

    def nested(self) -> dict[str, Fraction]:
        return {str(rho): v for rho, v in self.values.items()}


def _check_order(k: int, d: int) -> None:
    if k < 0 or d < 1:
        raise DimensionError(f"need k >= 0 and d >= 1, got k={k}, d={d}")
    if k > d:
        raise DimensionError(f"Weingarten tables are only provided for k <= d (k={k}, d={d})")


@lru_cache(maxsize=None)
def unitary_table(k: int, d: int) -> WeingartenTable:
    _check_order(k, d)
    lams = partitions_of(k)
    weights = {lam: Fraction(dimension(lam) ** 2) / schur_principal_value(lam, d) for lam in lams}
    norm = Fraction(1, factorial(k) ** 2)
    values = {
        rho: norm * sum(weights[lam] * character_value(lam, rho) for lam in lams)
        for rho in partitions_of(k)
    }
    return WeingartenTable(UNITARY, k, d, values)


@lru_cache(maxsize=None)
def orthogonal_table(k: int, d: int) -> WeingartenTable:
    _check_order(k, d)
    lams = partitions_of(k)
    weights = {lam: Fraction(dimension(lam.doubled()), zonal_principal_value(lam, d)) for lam in lams}
    norm = Fraction(2**k * factorial(k), factorial(2 * k))
    values = {
        rho: norm * sum(weights[lam] * zonal_value(lam, rho) for lam in lams)
        for rho in partitions_of(k)
    }
    return WeingartenTable(ORTHOGONAL, k, d, values)


def wg_unitary(k: int, d: int, rho: Partition) -> Fraction:
    """``Wg^U_{k,d}`` at any pair ``(π, σ)`` with ``π^{-1}σ`` of cycle type ``rho``."""
    if rho.k != k:
        raise DimensionError(f"ρ={rho} is not a partition of {k}")
    return unitary_table(k, d)[rho]


def wg_orthogonal(k: int, d: int, rho: Partition) -> Fraction:
    """``Wg^O_{k,d}`` at any pair of pairings with ``π^{-1}σ`` of coset type ``rho``."""
    if rho.k != k:
        raise DimensionError(f"ρ={rho} is not a partition of {k}")
    return orthogonal_table(k, d)[rho]


# -- moments ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _matching_permutations(target: tuple[int, ...], source: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All ``π`` with ``target(x) == source(π(x))`` for every ``x``."""
    k = len(target)
    out: list[tuple[int, ...]] = []
    used = [False] * (k + 1)
    current = [0] * k

    def place(x: int) -> None:
        if x == k:
            out.append(tuple(current))
            return
        want = target[x]
        for y in range(1, k + 1):
            if not used[y] and source[y - 1] == want:
                used[y] = True
                current[x] = y
                place(x + 1)
                used[y] = False

    place(0)
    return tuple(out)


def _check_indices(d: int, *indices: Sequence[int]) -> None:
    for idx in indices:
        if any(v < 1 or v > d for v in idx):
            raise DimensionError(f"index {tuple(idx)} has entries outside 1..{d}")


def haar_moment_unitary(
    d: int,
    i: Sequence[int],
    j: Sequence[int],
    ip: Sequence[int],
    jp: Sequence[int],
) -> Fraction:
    """``∫_{U_d} u_{i1 j1}...u_{ik jk} conj(u_{i'1 j'1})...conj(u_{i'k' j'k'}) dU``."""
    i, j, ip, jp = (tuple(int(v) for v in x) for x in (i, j, ip, jp))
    if len(i) != len(j) or len(ip) != len(jp):
        raise DimensionError("row and column multi-indices must have equal length")
    _check_indices(d, i, j, ip, jp)
    k = len(i)
    if k != len(ip):
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    if k > MAX_MOMENT_ORDER:
        raise ResourceLimitError(f"unitary moments supported for k <= {MAX_MOMENT_ORDER}")
    table = unitary_table(k, d).by_parts
    pis = _matching_permutations(i, ip)
    if not pis:
        return Fraction(0)
    sigmas = _matching_permutations(j, jp)
    total = Fraction(0)
    for pi in pis:
        pinv = inverse_images(pi)
        for sigma in sigmas:
            total += table[cycle_type_tuple(compose_images(pinv, sigma))]
    return total


@lru_cache(maxsize=None)
def _pairings_for(values: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Embedded images and their inverses for ``π ∈ P_2(2k)`` with ``π ≤ ker(values)``."""
    out = []
    for pairs in pairings_below(kernel_of(values)):
        im = pairing_images(pairs)
        out.append((im, inverse_images(im)))
    return tuple(out)


def haar_moment_orthogonal(d: int, i: Sequence[int], j: Sequence[int]) -> Fraction:
    """``∫_{O_d} u_{i1 j1} ... u_{i2k j2k} dU``."""
    i, j = tuple(int(v) for v in i), tuple(int(v) for v in j)
    if len(i) != len(j):
        raise DimensionError("row and column multi-indices must have equal length")
    if len(i) % 2:
        raise DimensionError(f"orthogonal moments need an even number of entries, got {len(i)}")
    _check_indices(d, i, j)
    k = len(i) // 2
    if k == 0:
        return Fraction(1)
    if k > MAX_MOMENT_ORDER:
        raise ResourceLimitError(f"orthogonal moments supported for k <= {MAX_MOMENT_ORDER}")
    table = orthogonal_table(k, d).by_parts
    pis = _pairings_for(i)
    if not pis:
        return Fraction(0)
    sigmas = _pairings_for(j)
    total = Fraction(0)
    for _, pinv in pis:
        for sigma, _ in sigmas:
            total += table[coset_type_tuple(compose_images(pinv, sigma))]
    return total


def haar_moment(
    group: str,
    d: int,
    rows: Sequence[int],
    cols: Sequence[int],
    conj_rows: Sequence[int] = (),
    conj_cols: Sequence[int] = (),
) -> Fraction:
    """Mixed moment of plain and conjugated entries over U_d or O_d.

    Over O_d the entries are real, so the conjugated factors are simply
    appended; an odd total number of factors integrates to zero because
    ``-U`` is again Haar distributed.
    """
    if group == UNITARY:
        return haar_moment_unitary(d, rows, cols, conj_rows, conj_cols)
    if group == ORTHOGONAL:
        all_rows = tuple(rows) + tuple(conj_rows)
        all_cols = tuple(cols) + tuple(conj_cols)
        if len(all_rows) % 2:
            _check_indices(d, all_rows, all_cols)
            return Fraction(0)
        return haar_moment_orthogonal(d, all_rows, all_cols)
    raise ValueError(f"unknown group {group!r}")
