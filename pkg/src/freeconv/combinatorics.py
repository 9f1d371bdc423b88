"""Integer partitions, permutations, set partitions and pair partitions.

Everything here is exact and 1-indexed: a permutation of ``{1..k}`` is
stored as the tuple of its images ``(s(1), ..., s(k))``.  The hot loops in
the other modules work on raw image tuples through :func:`cycle_type_tuple`
and :func:`compose_images` to avoid building wrapper objects per element.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError

Images = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """An integer partition stored as a weakly decreasing tuple of parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def ones(cls, k: int) -> "Partition":
        return cls((1,) * k)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"2,1"`` -> ``Partition((2, 1))``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls.of(*(int(t) for t in text.split(",")))

    @property
    def k(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def doubled(self) -> "Partition":
        """The partition ``2λ = (2λ_1, 2λ_2, ...)``."""
        return Partition(tuple(2 * p for p in self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(i, j)`` of the Young diagram, row ``i`` and column ``j`` from 1."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate().parts
        return [self.parts[i - 1] - j + conj[j - 1] - i + 1 for i, j in self.cells()]

    def is_ones(self) -> bool:
        return all(p == 1 for p in self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@lru_cache(maxsize=None)
def _partition_tuples(k: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partition_tuples(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse lexicographic order, ``(k)`` first."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [Partition(t) for t in _partition_tuples(k, k)]


def partition_count(k: int) -> int:
    return len(_partition_tuples(k, k))


# -- permutations ------------------------------------------------------------


def cycle_type_tuple(images: Sequence[int]) -> tuple[int, ...]:
    """Cycle type of a 1-indexed image tuple, as decreasing parts."""
    n = len(images)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def compose_images(s: Sequence[int], t: Sequence[int]) -> Images:
    """Images of ``s ∘ t``, i.e. ``x -> s(t(x))``."""
    return tuple(s[x - 1] for x in t)


def inverse_images(s: Sequence[int]) -> Images:
    inv = [0] * len(s)
    for x, y in enumerate(s, start=1):
        inv[y - 1] = x
    return tuple(inv)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..k}`` given by its images."""

    images: Images

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, k: int, *cycles: Sequence[int]) -> "Permutation":
        """``Permutation.from_cycles(5, (1, 2, 3), (4, 5))`` is (1 2 3)(4 5)."""
        images = list(range(1, k + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> "Permutation":
        return cls.from_cycles(k, (i, j))

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.k != self.k:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(compose_images(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(inverse_images(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


def all_permutations(k: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, k + 1)):
        yield Permutation(images)


def cycle_type(s: Permutation) -> Partition:
    return Partition(cycle_type_tuple(s.images))


def sign(s: Permutation) -> int:
    """``(-1)^(k - number of cycles)``."""
    return -1 if (s.k - len(cycle_type_tuple(s.images))) % 2 else 1


def sign_of_images(images: Sequence[int]) -> int:
    return -1 if (len(images) - len(cycle_type_tuple(images))) % 2 else 1


# -- counting ----------------------------------------------------------------


def z_of(rho: Partition | Sequence[int]) -> int:
    """``z_ρ = ∏ i^{m_i} m_i!``, the centralizer order of the class ``ρ``."""
    parts = rho.parts if isinstance(rho, Partition) else tuple(rho)
    return prod(i**m * factorial(m) for i, m in Counter(parts).items())


@lru_cache(maxsize=None)
def stirling_first_unsigned(k: int, i: int) -> int:
    """Number of permutations of ``k`` points with exactly ``i`` cycles."""
    if k < 0 or i < 0:
        raise ValueError("arguments must be nonnegative")
    if i > k:
        raise ValueError(f"i={i} exceeds k={k}")
    if k == 0:
        return 1
    if i == 0:
        return 0
    if i == k:
        return 1
    return stirling_first_unsigned(k - 1, i - 1) + (k - 1) * stirling_first_unsigned(k - 1, i)


def rising_factorial(x: int | Fraction, k: int) -> Fraction:
    """``x (x+1) ... (x+k-1)``; 1 for ``k = 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(prod((Fraction(x) + t for t in range(k)), start=Fraction(1)))


def falling_factorial(x: int | Fraction, k: int) -> Fraction:
    """``x (x-1) ... (x-k+1)``; 1 for ``k = 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(prod((Fraction(x) - t for t in range(k)), start=Fraction(1)))


def double_factorial_odd(k: int) -> int:
    """``(2k-1)!! = |P_2(2k)|``."""
    return prod(range(1, 2 * k, 2))


# -- set partitions ----------------------------------------------------------


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``{1..n}`` into blocks, canonically sorted."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        flat = [x for b in blocks for x in b]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks do not partition 1..{len(flat)}: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {x: bi for bi, b in enumerate(self.blocks) for x in b}

    def refines(self, other: "SetPartition") -> bool:
        """``self ≤ other``: each block of ``self`` sits inside a block of ``other``."""
        if self.n != other.n:
            return False
        where = other.block_of()
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def is_singletons(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of ``{1..n}`` via restricted growth strings."""

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for label in range(top + 2):
            yield from grow(prefix + [label], max(top, label))

    if n == 0:
        yield SetPartition(())
        return
    for rgs in grow([0], 0):
        blocks: dict[int, list[int]] = {}
        for x, label in enumerate(rgs, start=1):
            blocks.setdefault(label, []).append(x)
        yield SetPartition(tuple(tuple(b) for b in blocks.values()))


@dataclass(frozen=True)
class MultiIndex:
    """A map ``{1..k} -> {1..d}`` stored as its tuple of values."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if any(v < 1 for v in values):
            raise DimensionError(f"multi-index entries must be >= 1: {values}")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __call__(self, s: int) -> int:
        return self.values[s - 1]

    def check(self, d: int) -> "MultiIndex":
        if any(v > d for v in self.values):
            raise DimensionError(f"multi-index {self.values} has entries outside 1..{d}")
        return self

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)


def kernel_of(m: MultiIndex | Sequence[int]) -> SetPartition:
    """The partition of positions into level sets of ``m``."""
    values = tuple(m)
    levels: dict[int, list[int]] = {}
    for s, v in enumerate(values, start=1):
        levels.setdefault(v, []).append(s)
    return SetPartition(tuple(tuple(b) for b in levels.values()))


def multi_indices(k: int, d: int) -> Iterator[MultiIndex]:
    for values in itertools.product(range(1, d + 1), repeat=k):
        yield MultiIndex(values)


# -- pair partitions ---------------------------------------------------------


@dataclass(frozen=True)
class PairPartition:
    """A perfect matching of ``{1..2k}``.

    Canonical form: each pair is ``(small, large)`` and pairs are sorted by
    their smaller element, which is the listing used by the embedding into
    ``S_{2k}``.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        if any(len(p) != 2 for p in pairs):
            raise ValueError("every block of a pair partition has two elements")
        flat = [x for p in pairs for x in p]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"pairs do not cover 1..{len(flat)} exactly once: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def k(self) -> int:
        return len(self.pairs)

    def as_set_partition(self) -> SetPartition:
        return SetPartition(self.pairs)

    def refines(self, other: SetPartition) -> bool:
        return self.as_set_partition().refines(other)


def _pairings(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in _pairings(remaining):
            yield ((first, partner),) + tail


def pair_partitions(n: int) -> Iterator[PairPartition]:
    """All perfect matchings of ``{1..n}``; empty when ``n`` is odd."""
    if n % 2:
        return
    for pairs in _pairings(tuple(range(1, n + 1))):
        yield PairPartition(pairs)


def pairings_below(partition: SetPartition) -> list[tuple[tuple[int, int], ...]]:
    """Raw pairings ``π ∈ P_2(n)`` with ``π ≤ partition`` (pair up inside each block)."""
    per_block = []
    for block in partition.blocks:
        if len(block) % 2:
            return []
        per_block.append(list(_pairings(block)))
    return [tuple(p for chunk in combo for p in chunk) for combo in itertools.product(*per_block)]


def pairing_images(pairs: Iterable[tuple[int, int]]) -> Images:
    """Images of the embedded permutation for raw (unsorted) pairs."""
    canon = sorted(tuple(sorted(p)) for p in pairs)
    return tuple(x for p in canon for x in p)


def pair_partition_to_permutation(p: PairPartition) -> Permutation:
    """Embed ``P_2(2k)`` in ``S_{2k}``: ``i -> π(i)`` for the canonical listing."""
    return Permutation(pairing_images(p.pairs))


# -- hyperoctahedral group and coset type -------------------------------------


@lru_cache(maxsize=None)
def hyperoctahedral_images(k: int) -> tuple[Images, ...]:
    """All ``2^k k!`` elements of ``H_k ⊂ S_{2k}`` as image tuples.

    Built directly as signed permutations of the pairs ``{2i-1, 2i}``: the
    pair ``i`` goes to pair ``t(i)``, swapped or not.
    """
    out = []
    for t in itertools.permutations(range(1, k + 1)):
        for flips in itertools.product((0, 1), repeat=k):
            images = [0] * (2 * k)
            for i in range(k):
                lo, hi = 2 * t[i] - 1, 2 * t[i]
                if flips[i]:
                    lo, hi = hi, lo
                images[2 * i] = lo
                images[2 * i + 1] = hi
            out.append(tuple(images))
    return tuple(out)


def hyperoctahedral_group(k: int) -> list[Permutation]:
    return [Permutation(im) for im in hyperoctahedral_images(k)]


def coset_type_tuple(images: Sequence[int]) -> tuple[int, ...]:
    """Coset type of a 1-indexed image tuple of even length."""
    n = len(images)
    if n % 2:
        raise DimensionError(f"coset type needs an even ground set, got {n}")
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, n // 2 + 1):
        for a, b in ((2 * i - 1, 2 * i), (images[2 * i - 2], images[2 * i - 1])):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    sizes = Counter(find(x) for x in range(1, n + 1))
    return tuple(sorted((s // 2 for s in sizes.values()), reverse=True))


def coset_type(s: Permutation) -> Partition:
    """Half the component sizes of the graph with edges ``{2i-1,2i}`` and ``{s(2i-1),s(2i)}``."""
    return Partition(coset_type_tuple(s.images))


def coset_representative(rho: Partition) -> Permutation:
    """A permutation of ``{1..2k}`` whose coset type is ``rho``.

    Each part ``m`` occupies ``2m`` consecutive points ``o+1..o+2m`` and is
    wired as the pairing ``{o+1, o+2m}, {o+2, o+3}, ..., {o+2m-2, o+2m-1}``,
    which closes the graph into one cycle of length ``2m``.
    """
    pairs = []
    offset = 0
    for m in rho.parts:
        pairs.append((offset + 1, offset + 2 * m))
        pairs.extend((offset + 2 * i, offset + 2 * i + 1) for i in range(1, m))
        offset += 2 * m
    return Permutation(pairing_images(pairs))
