"""Characters of symmetric groups and zonal spherical functions of (S_2k, H_k).

Characters come from the Murnaghan-Nakayama rule on beta-sets.  Zonal
spherical functions are evaluated by their defining average

    ω^λ(σ) = |H_k|^-1 Σ_{ζ ∈ H_k} χ^{2λ}(σζ)

at one representative per coset type.  All values are exact ``int`` or
``Fraction``; nothing in this module touches floating point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .combinatorics import (
    Partition,
    Permutation,
    compose_images,
    coset_representative,
    cycle_type_tuple,
    hyperoctahedral_images,
    partitions_of,
    z_of,
)
from .errors import DimensionError, ResourceLimitError, WeightMismatchError

#: Largest symmetric group S_n whose characters we agree to compute.
MAX_CHARACTER_WEIGHT = 12
#: Largest k for which zonal values are averaged over H_k (|H_6| = 46080).
MAX_ZONAL_WEIGHT = 6


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        moved = sorted((present - {b}) | {nb}, reverse=True)
        shape = tuple(p for p in (moved[i] - (n - 1 - i) for i in range(n)) if p > 0)
        term = _mn(shape, rest)
        total += -term if height % 2 else term
    return total


def character_value(lam: Partition, rho: Partition) -> int:
    """``χ^λ_ρ``: the irreducible character ``λ`` of ``S_k`` on the class ``ρ``."""
    if lam.k != rho.k:
        raise WeightMismatchError(f"|λ|={lam.k} but |ρ|={rho.k}")
    if lam.k > MAX_CHARACTER_WEIGHT:
        raise ResourceLimitError(f"characters supported for k <= {MAX_CHARACTER_WEIGHT}")
    return _mn(lam.parts, rho.parts)


def character_of_permutation(lam: Partition, s: Permutation) -> int:
    return character_value(lam, Partition(cycle_type_tuple(s.images)))


def hook_product(lam: Partition) -> int:
    """Product of the hook lengths of ``λ``."""
    return prod(lam.hook_lengths())


def dimension(lam: Partition) -> int:
    """``χ^λ(1) = k!/h(λ)`` by the hook-length formula."""
    return factorial(lam.k) // hook_product(lam)


def schur_principal_value(lam: Partition, d: int) -> Fraction:
    """``s_λ(1^d)`` by the hook-content formula."""
    if lam.length() > d:
        raise DimensionError(f"ℓ(λ)={lam.length()} exceeds d={d}")
    contents = prod(d + j - i for i, j in lam.cells())
    return Fraction(dimension(lam) * contents, factorial(lam.k))


def zonal_principal_value(lam: Partition, d: int) -> int:
    """``Z_λ(1^d) = ∏_{(i,j) ∈ λ} (d + 2j - i - 1)``."""
    if lam.length() > d:
        raise DimensionError(f"ℓ(λ)={lam.length()} exceeds d={d}")
    return prod(d + 2 * j - i - 1 for i, j in lam.cells())


@dataclass(frozen=True)
class CharacterTable:
    k: int
    values: dict[tuple[Partition, Partition], int] = field(repr=False)

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.values[key]

    def rows(self) -> list[Partition]:
        return partitions_of(self.k)

    def nested(self) -> dict[str, dict[str, int]]:
        """``{λ: {ρ: χ^λ_ρ}}`` keyed by partition strings."""
        parts = self.rows()
        return {str(lam): {str(rho): self.values[lam, rho] for rho in parts} for lam in parts}


def character_table(k: int) -> CharacterTable:
    parts = partitions_of(k)
    return CharacterTable(k, {(lam, rho): character_value(lam, rho) for lam in parts for rho in parts})


# -- zonal spherical functions -----------------------------------------------


def _check_zonal_weight(k: int) -> None:
    if k > MAX_ZONAL_WEIGHT:
        raise ResourceLimitError(f"zonal averaging supported for k <= {MAX_ZONAL_WEIGHT}")


@lru_cache(maxsize=None)
def _class_profile(images: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Multiset of cycle types of ``σζ`` as ``ζ`` runs over ``H_k``."""
    k = len(images) // 2
    counts = Counter(cycle_type_tuple(compose_images(images, z)) for z in hyperoctahedral_images(k))
    return tuple(sorted(counts.items()))


def zonal_value_at(lam: Partition, s: Permutation) -> Fraction:
    """``ω^λ(σ)`` for an arbitrary ``σ ∈ S_{2k}`` straight from the defining average."""
    k = lam.k
    if s.k != 2 * k:
        raise WeightMismatchError(f"ω^λ with |λ|={k} lives on S_{2 * k}, got S_{s.k}")
    _check_zonal_weight(k)
    doubled = lam.doubled().parts
    total = sum(count * _mn(doubled, ct) for ct, count in _class_profile(s.images))
    return Fraction(total, len(hyperoctahedral_images(k)))


@lru_cache(maxsize=None)
def _zonal_cached(lam: tuple[int, ...], rho: tuple[int, ...]) -> Fraction:
    rep = coset_representative(Partition(rho))
    return zonal_value_at(Partition(lam), rep)


def zonal_value(lam: Partition, rho: Partition) -> Fraction:
    """``ω^λ_ρ``: the zonal spherical function ``λ`` on the double coset ``H_ρ``."""
    if lam.k != rho.k:
        raise WeightMismatchError(f"|λ|={lam.k} but |ρ|={rho.k}")
    _check_zonal_weight(lam.k)
    return _zonal_cached(lam.parts, rho.parts)


@dataclass(frozen=True)
class ZonalTable:
    k: int
    values: dict[tuple[Partition, Partition], Fraction] = field(repr=False)

    def __getitem__(self, key: tuple[Partition, Partition]) -> Fraction:
        return self.values[key]

    def nested(self) -> dict[str, dict[str, Fraction]]:
        parts = partitions_of(self.k)
        return {str(lam): {str(rho): self.values[lam, rho] for rho in parts} for lam in parts}


def zonal_table(k: int) -> ZonalTable:
    _check_zonal_weight(k)
    parts = partitions_of(k)
    return ZonalTable(k, {(lam, rho): zonal_value(lam, rho) for lam in parts for rho in parts})


def hyperoctahedral_order(k: int) -> int:
    return 2**k * factorial(k)


def double_coset_size(rho: Partition) -> Fraction:
    """``|H_ρ| = |H_k|^2 / z_{2ρ}``."""
    return Fraction(hyperoctahedral_order(rho.k) ** 2, z_of(rho.doubled()))


# -- the two alternating sums --------------------------------------------------


def signed_character_sum(lam: Partition) -> int:
    """``Σ_{σ ∈ S_k} sgn(σ) χ^λ(σ)``, summed class by class."""
    k = lam.k
    total = Fraction(0)
    for rho in partitions_of(k):
        sgn = -1 if (k - rho.length()) % 2 else 1
        total += Fraction(factorial(k), z_of(rho)) * sgn * character_value(lam, rho)
    return int(total)


def signed_zonal_sum(lam: Partition) -> Fraction:
    """``Σ_{σ ∈ S_k} sgn(σ) ω^λ_{μ_σ}``, summed class by class."""
    k = lam.k
    total = Fraction(0)
    for rho in partitions_of(k):
        sgn = -1 if (k - rho.length()) % 2 else 1
        total += Fraction(factorial(k), z_of(rho)) * sgn * zonal_value(lam, rho)
    return total
