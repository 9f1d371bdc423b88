import itertools
import random
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

import pytest

from freeconv.characters import (
    MAX_CHARACTER_WEIGHT,
    character_of_permutation,
    character_table,
    character_value,
    dimension,
    double_coset_size,
    hook_product,
    hyperoctahedral_order,
    schur_principal_value,
    signed_character_sum,
    signed_zonal_sum,
    zonal_principal_value,
    zonal_table,
    zonal_value,
    zonal_value_at,
)
from freeconv.combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    coset_representative,
    coset_type,
    hyperoctahedral_group,
    partitions_of,
    sign,
    z_of,
)
from freeconv.errors import DimensionError, ResourceLimitError, WeightMismatchError


def P(*parts):
    return Partition(tuple(parts))


@lru_cache(maxsize=None)
def _power_sum_exponents(n: int, rho: tuple) -> Counter:
    """Exponent vectors of the monomials of p_ρ(x_1..x_n), with multiplicity."""
    out = Counter()
    for choice in itertools.product(range(n), repeat=len(rho)):
        e = [0] * n
        for r, var in zip(rho, choice):
            e[var] += r
        out[tuple(e)] += 1
    return out


def frobenius_character(lam: tuple, rho: tuple) -> int:
    """Coefficient of x^(λ+δ) in a_δ·p_ρ, with ℓ(λ) variables."""
    n = len(lam)
    delta = tuple(range(n - 1, -1, -1))
    target = tuple(lam[i] + delta[i] for i in range(n))
    terms = _power_sum_exponents(n, rho)
    total = 0
    for w in itertools.permutations(range(n)):
        need = tuple(target[i] - delta[w[i]] for i in range(n))
        if min(need) >= 0:
            total += sign(Permutation(tuple(x + 1 for x in w))) * terms.get(need, 0)
    return total


def count_standard_tableaux(parts: tuple) -> int:
    if sum(parts) == 0:
        return 1
    total = 0
    for i, p in enumerate(parts):
        if p and (i + 1 == len(parts) or parts[i + 1] < p):
            total += count_standard_tableaux(parts[:i] + (p - 1,) + parts[i + 1 :])
    return total


def count_ssyt(lam: Partition, d: int) -> int:
    """Semistandard tableaux of shape λ with entries in 1..d, by brute force."""
    cells = list(lam.cells())
    count = 0
    for filling in itertools.product(range(1, d + 1), repeat=len(cells)):
        t = dict(zip(cells, filling))
        rows_ok = all(t[i, j] <= t[i, j + 1] for (i, j) in cells if (i, j + 1) in t)
        cols_ok = all(t[i, j] < t[i + 1, j] for (i, j) in cells if (i + 1, j) in t)
        count += rows_ok and cols_ok
    return count


class TestCharacters:
    def test_examples(self):
        for k in range(1, 6):
            for rho in partitions_of(k):
                assert character_value(P(k), rho) == 1
                assert character_value(Partition.ones(k), rho) == (-1) ** (k - rho.length())
        assert [character_value(P(2, 1), r) for r in (P(1, 1, 1), P(2, 1), P(3))] == [2, 0, -1]

    @pytest.mark.parametrize("k", range(1, 7))
    def test_matches_frobenius_formula(self, k):
        for lam in partitions_of(k):
            for rho in partitions_of(k):
                assert character_value(lam, rho) == frobenius_character(lam.parts, rho.parts)

    def test_errors(self):
        with pytest.raises(WeightMismatchError):
            character_value(P(2), P(1))
        big = MAX_CHARACTER_WEIGHT + 1
        with pytest.raises(ResourceLimitError):
            character_value(P(big), P(big))

    def test_table_and_permutation_form(self):
        table = character_table(4)
        for s in all_permutations(4):
            for lam in partitions_of(4):
                assert character_of_permutation(lam, s) == table[lam, Partition(tuple(sorted(map(len, s.cycles()), reverse=True)))]
        assert set(table.nested()) == {str(lam) for lam in partitions_of(4)}

    @pytest.mark.parametrize("k", range(1, 7))
    def test_column_orthogonality(self, k):
        parts = partitions_of(k)
        for r, s in itertools.product(parts, repeat=2):
            total = sum(character_value(lam, r) * character_value(lam, s) for lam in parts)
            assert total == (z_of(r) if r == s else 0)


class TestHooksAndDimensions:
    def test_hook_examples(self):
        assert hook_product(P(1)) == 1
        assert hook_product(P(2)) == 2
        # hooks of (4,2): 5,4,2,1 in the first row and 2,1 in the second
        assert hook_product(P(4, 2)) == 80
        assert P(4, 2).hook_lengths() == [5, 4, 2, 1, 2, 1]

    @pytest.mark.parametrize("k", range(1, 8))
    def test_dimension_counts_tableaux(self, k):
        for lam in partitions_of(k):
            dim = dimension(lam)
            assert dim == count_standard_tableaux(lam.parts)
            assert dim == character_value(lam, Partition.ones(k))
            assert dim * hook_product(lam) == factorial(k)

    def test_dimension_examples(self):
        assert dimension(P(3)) == 1
        assert dimension(P(1, 1, 1)) == 1
        assert dimension(P(2, 1)) == 2


class TestPrincipalValues:
    def test_schur_examples(self):
        for d in range(1, 6):
            assert schur_principal_value(P(1), d) == d
            for k in range(1, d + 1):
                assert schur_principal_value(Partition.ones(k), d) == comb(d, k)
        assert schur_principal_value(P(2), 3) == 6
        with pytest.raises(DimensionError):
            schur_principal_value(P(1, 1, 1), 2)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_schur_counts_semistandard_tableaux(self, d):
        for k in range(1, 5):
            for lam in partitions_of(k):
                if lam.length() <= d:
                    assert schur_principal_value(lam, d) == count_ssyt(lam, d)

    def test_zonal_principal(self):
        for d in range(1, 7):
            assert zonal_principal_value(P(1), d) == d
            for k in range(1, d + 1):
                assert zonal_principal_value(Partition.ones(k), d) == factorial(d) // factorial(d - k)
        assert zonal_principal_value(P(1, 1), 4) == 12
        # cells (1,1) and (1,2) contribute d and d+2
        assert zonal_principal_value(P(2), 3) == 15
        assert all(zonal_principal_value(P(2), d) == d * (d + 2) for d in range(1, 9))
        with pytest.raises(DimensionError):
            zonal_principal_value(P(1, 1), 1)


class TestZonal:
    def test_examples(self):
        for k in range(1, 6):
            for lam in partitions_of(k):
                assert zonal_value(lam, Partition.ones(k)) == 1
            for rho in partitions_of(k):
                e = k - rho.length()
                assert zonal_value(Partition.ones(k), rho) == Fraction((-1) ** e, 2**e)
        assert zonal_value(P(1, 1), P(2)) == Fraction(-1, 2)
        total = Fraction(1, z_of(P(2))) * zonal_value(P(1), P(1)) ** 2
        assert total == Fraction(hook_product(P(2)), hyperoctahedral_order(1) ** 2) == Fraction(1, 2)

    def test_errors(self):
        with pytest.raises(WeightMismatchError):
            zonal_value(P(2), P(1))
        with pytest.raises(ResourceLimitError):
            zonal_value(P(7), P(7))
        with pytest.raises(WeightMismatchError):
            zonal_value_at(P(2), Permutation.identity(3))

    @pytest.mark.parametrize("k", range(1, 5))
    def test_constant_on_double_cosets(self, k):
        rng = random.Random(k)
        group = hyperoctahedral_group(k)
        for rho in partitions_of(k):
            rep = coset_representative(rho)
            for _ in range(20):
                s = rng.choice(group) * rep * rng.choice(group)
                assert coset_type(s) == rho
                for lam in partitions_of(k):
                    assert zonal_value_at(lam, s) == zonal_value(lam, rho)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_double_coset_sizes(self, k):
        counts = {}
        for s in all_permutations(2 * k):
            ct = coset_type(s)
            counts[ct] = counts.get(ct, 0) + 1
        assert counts == {rho: double_coset_size(rho) for rho in partitions_of(k)}

    @pytest.mark.parametrize("k", range(1, 5))
    def test_orthogonality(self, k):
        zt = zonal_table(k)
        parts = partitions_of(k)
        for lam, mu in itertools.product(parts, repeat=2):
            total = sum(Fraction(1, z_of(r.doubled())) * zt[lam, r] * zt[mu, r] for r in parts)
            expected = Fraction(hook_product(lam.doubled()), hyperoctahedral_order(k) ** 2) if lam == mu else 0
            assert total == expected


class TestSignedSums:
    def test_examples(self):
        assert signed_character_sum(P(1, 1, 1)) == 6
        assert signed_character_sum(P(3)) == 0
        assert signed_character_sum(P(2, 1)) == 0
        assert signed_zonal_sum(P(1, 1)) == Fraction(3, 2)
        assert signed_zonal_sum(P(2)) == 0
        assert signed_zonal_sum(P(1)) == 1

    @pytest.mark.parametrize("k", range(1, 6))
    def test_character_sum_brute_force(self, k):
        perms = list(all_permutations(k))
        for lam in partitions_of(k):
            brute = sum((-1) ** s.inversions() * character_of_permutation(lam, s) for s in perms)
            assert signed_character_sum(lam) == brute
