import itertools
from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from freeconv.combinatorics import (
    MultiIndex,
    PairPartition,
    Partition,
    Permutation,
    SetPartition,
    all_permutations,
    coset_representative,
    coset_type,
    cycle_type,
    double_factorial_odd,
    falling_factorial,
    hyperoctahedral_group,
    kernel_of,
    pair_partition_to_permutation,
    pair_partitions,
    pairings_below,
    partition_count,
    partitions_of,
    rising_factorial,
    set_partitions,
    sign,
    stirling_first_unsigned,
    z_of,
)
from freeconv.errors import DimensionError

permutations_st = st.integers(1, 7).flatmap(lambda k: st.permutations(list(range(1, k + 1))))


def P(*parts):
    return Partition(tuple(parts))


class TestPartition:
    def test_enumeration_small(self):
        assert partitions_of(0) == [Partition(())]
        assert partitions_of(3) == [P(3), P(2, 1), P(1, 1, 1)]
        assert len(partitions_of(6)) == 11

    @pytest.mark.parametrize("k", range(0, 16))
    def test_counts_match_independent_count(self, k):
        parts = partitions_of(k)
        assert len(parts) == len(set(parts)) == sympy.partition(k) == partition_count(k)
        assert all(p.k == k for p in parts)

    def test_reverse_lexicographic(self):
        parts = [p.parts for p in partitions_of(7)]
        assert parts == sorted(parts, reverse=True)

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    @given(st.lists(st.integers(1, 6), max_size=8))
    def test_multiplicities_and_conjugate(self, raw):
        lam = Partition.of(*raw)
        assert sum(i * m for i, m in lam.multiplicities().items()) == lam.k
        assert lam.length() == len(raw)
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().k == lam.k
        assert Partition.parse(str(lam)) == lam
        assert lam.doubled().k == 2 * lam.k
        assert len(lam.hook_lengths()) == lam.k


class TestPermutation:
    def test_cycle_type_examples(self):
        assert cycle_type(Permutation.identity(4)) == P(1, 1, 1, 1)
        assert cycle_type(Permutation.from_cycles(3, (1, 2))) == P(2, 1)
        assert cycle_type(Permutation.from_cycles(5, (1, 2, 3), (4, 5))) == P(3, 2)

    def test_sign_examples(self):
        assert sign(Permutation.identity(5)) == 1
        for i, j in itertools.combinations(range(1, 6), 2):
            assert sign(Permutation.transposition(5, i, j)) == -1
        assert sign(Permutation.from_cycles(3, (1, 2, 3))) == 1

    @pytest.mark.parametrize("k", range(1, 7))
    def test_sign_matches_inversion_parity(self, k):
        for s in all_permutations(k):
            assert sign(s) == (-1) ** s.inversions()
            assert len(cycle_type(s)) == len(s.cycles())

    @given(permutations_st, st.data())
    def test_sign_is_multiplicative(self, images, data):
        s = Permutation(tuple(images))
        t = Permutation(tuple(data.draw(st.permutations(list(range(1, s.k + 1))))))
        assert sign(s * t) == sign(s) * sign(t)
        assert (s * t)(1) == s(t(1))
        assert s * s.inverse() == Permutation.identity(s.k)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))


class TestCounting:
    def test_z_examples(self):
        assert z_of(P(1, 1, 1)) == 6
        assert z_of(P(2, 1)) == 2
        assert z_of(P(3)) == 3

    @pytest.mark.parametrize("k", range(1, 9))
    def test_class_sizes_and_doubling(self, k):
        assert sum(Fraction(factorial(k), z_of(r)) for r in partitions_of(k)) == factorial(k)
        for r in partitions_of(k):
            assert z_of(r.doubled()) == 2 ** r.length() * z_of(r)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_class_sizes_brute_force(self, k):
        counts = {}
        for s in all_permutations(k):
            counts[cycle_type(s)] = counts.get(cycle_type(s), 0) + 1
        assert counts == {r: factorial(k) // z_of(r) for r in partitions_of(k)}

    def test_stirling_examples(self):
        assert stirling_first_unsigned(3, 1) == 2
        assert stirling_first_unsigned(3, 3) == 1
        assert stirling_first_unsigned(4, 2) == 11
        with pytest.raises(ValueError):
            stirling_first_unsigned(3, 4)

    def test_factorials(self):
        assert rising_factorial(2, 3) == 24
        assert falling_factorial(5, 2) == 20
        assert rising_factorial(1, 3) == factorial(4) // 4
        assert rising_factorial(Fraction(1, 2), 0) == 1
        for d in range(0, 8):
            for k in range(0, d + 1):
                assert falling_factorial(d, k) == Fraction(factorial(d), factorial(d - k))
        assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)


class TestSetPartitions:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_bell_numbers(self, n):
        parts = list(set_partitions(n))
        assert len(parts) == len(set(parts)) == sympy.bell(n)

    def test_kernel_examples(self):
        assert kernel_of(MultiIndex((5, 5, 2))) == SetPartition(((1, 2), (3,)))
        assert kernel_of((1, 2, 1, 2)) == SetPartition(((1, 3), (2, 4)))
        assert kernel_of((4, 1, 3)).is_singletons()

    @given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
    def test_kernel_levels(self, values):
        ker = kernel_of(values)
        where = ker.block_of()
        for s, t in itertools.combinations(range(1, len(values) + 1), 2):
            assert (where[s] == where[t]) == (values[s - 1] == values[t - 1])
        assert MultiIndex(tuple(values)).is_injective() == ker.is_singletons()

    def test_refinement(self):
        fine = SetPartition(((1,), (2,), (3, 4)))
        coarse = SetPartition(((1, 2), (3, 4)))
        assert fine.refines(coarse) and not coarse.refines(fine)

    def test_multi_index_range(self):
        with pytest.raises(DimensionError):
            MultiIndex((1, 4)).check(3)
        with pytest.raises(DimensionError):
            MultiIndex((0, 1))


class TestPairPartitions:
    def test_embedding_examples(self):
        assert pair_partition_to_permutation(PairPartition(((1, 2), (3, 4)))) == Permutation.identity(4)
        assert pair_partition_to_permutation(PairPartition(((1, 3), (2, 4)))).images == (1, 3, 2, 4)
        assert pair_partition_to_permutation(PairPartition(((4, 1), (3, 2)))).images == (1, 4, 2, 3)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_embedding_injective_and_count(self, k):
        pps = list(pair_partitions(2 * k))
        assert len(pps) == double_factorial_odd(k)
        images = {pair_partition_to_permutation(p) for p in pps}
        assert len(images) == len(pps)
        for s in images:
            assert all(s(2 * i - 1) < s(2 * i) for i in range(1, k + 1))

    def test_pairings_below_kernel(self):
        ker = kernel_of((1, 1, 2, 2, 1, 1))
        below = pairings_below(ker)
        assert len(below) == 3
        assert all(PairPartition(p).refines(ker) for p in below)
        assert pairings_below(kernel_of((1, 1, 2))) == []


class TestCosetType:
    def test_examples(self):
        assert coset_type(Permutation.identity(4)) == P(1, 1)
        assert coset_type(Permutation.transposition(2, 1, 2)) == P(1)
        assert coset_type(Permutation.transposition(4, 2, 3)) == P(2)
        with pytest.raises(DimensionError):
            coset_type(Permutation.identity(3))

    @pytest.mark.parametrize("k", range(1, 7))
    def test_identity_and_representatives(self, k):
        assert coset_type(Permutation.identity(2 * k)) == Partition.ones(k)
        for rho in partitions_of(k):
            assert coset_type(coset_representative(rho)) == rho

    @pytest.mark.parametrize("k", range(1, 4))
    def test_hyperoctahedral_is_centralizer(self, k):
        fixed = Permutation.from_cycles(2 * k, *((2 * i - 1, 2 * i) for i in range(1, k + 1)))
        brute = {s for s in all_permutations(2 * k) if s * fixed == fixed * s}
        group = hyperoctahedral_group(k)
        assert len(group) == 2**k * factorial(k)
        assert set(group) == brute

    @pytest.mark.parametrize("k", range(1, 4))
    def test_invariant_under_hyperoctahedral_action(self, k):
        group = hyperoctahedral_group(k)
        for s in all_permutations(2 * k):
            ct = coset_type(s)
            for z in group:
                assert coset_type(z * s) == ct
                assert coset_type(s * z) == ct
