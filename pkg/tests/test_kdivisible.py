"""Tests for k-divisible noncrossing partitions and 2-partitions."""

from typing import cast

import pytest

from src.config import GuardExceededError
from src.kdivisible import (
    KChainNC,
    KChainPP,
    KDivisibleError,
    build_nc_k,
    build_pp_k,
    descent_is_unique,
    edelman_agreement,
    edelman_divisible,
    k_prime_filter,
    k_prime_table,
    kdivisible_character_table,
    nc_multichain_identity,
    pp_k_order_complex,
    pp_multichain_identity,
    rank_matches_hasse,
    verify_kdivisible,
)
from src.nc.partitions import NoncrossingPartition
from src.nc.permutations import Permutation
from src.parking import NC2Pair
from src.poset import build_pp_poset


class TestChains:
    """Tests for the element models."""

    def test_chain_must_increase(self) -> None:
        """Test that 1_2 <= 0_2 is rejected."""
        with pytest.raises(ValueError, match="fails"):
            KChainNC(chain=(NoncrossingPartition.one(2), NoncrossingPartition.zero(2)))

    def test_complements(self) -> None:
        """Test relative complements along 0_2 <= 1_2."""
        chain = KChainNC(chain=(NoncrossingPartition.zero(2), NoncrossingPartition.one(2)))
        assert chain.k == 2
        assert chain.rank == 1
        assert chain.complements()[0] == NoncrossingPartition.one(2)
        assert chain.is_prime()

    def test_top_must_match(self, bottom3: NC2Pair) -> None:
        """Test that the parking element must sit over pi_k."""
        chain = KChainNC(chain=(NoncrossingPartition.one(3),))
        with pytest.raises(ValueError, match="expected"):
            KChainPP(partitions=chain, top=bottom3)

    def test_multichain(self, sample_pair: NC2Pair) -> None:
        """Test that descending recovers a multichain ending at the top."""
        chain = KChainNC(chain=(NoncrossingPartition.zero(3), sample_pair.pi))
        element = KChainPP(partitions=chain, top=sample_pair)
        multichain = element.multichain()
        assert multichain[-1] == sample_pair
        assert multichain[0].sigma == Permutation.identity(3)
        assert element.is_prime()


class TestPosets:
    """Tests for the built k-divisible posets."""

    @pytest.mark.parametrize(("n", "k", "expected"), [(2, 2, 3), (3, 2, 12), (2, 3, 4), (3, 3, 22)])
    def test_nc_size(self, n: int, k: int, expected: int) -> None:
        """Test Fuss-Catalan many elements."""
        assert len(build_nc_k(n, k)) == expected

    @pytest.mark.parametrize(("n", "k", "expected"), [(2, 2, 5), (3, 2, 49), (2, 3, 7)])
    def test_pp_size(self, n: int, k: int, expected: int) -> None:
        """Test (kn + 1)^(n - 1) elements."""
        assert len(build_pp_k(n, k)) == expected

    def test_k1_is_the_parking_poset(self) -> None:
        """Test that k = 1 gives back the parking poset's rank sizes."""
        assert build_pp_k(3, 1).rank_sizes() == build_pp_poset(3).rank_sizes()

    @pytest.mark.parametrize(("n", "k"), [(2, 2), (3, 2), (2, 3)])
    def test_ranks(self, n: int, k: int) -> None:
        """Test that stored ranks are Hasse ranks."""
        assert rank_matches_hasse(build_nc_k(n, k))
        assert rank_matches_hasse(build_pp_k(n, k))

    def test_descent(self) -> None:
        """Test unique descent at n = 3, k = 2."""
        assert descent_is_unique(3, 2)

    @pytest.mark.parametrize("j", [1, 2])
    def test_multichain_identities(self, j: int) -> None:
        """Test both multichain identities at n = 3, k = 2."""
        assert nc_multichain_identity(3, 2, j)
        assert pp_multichain_identity(3, 2, j)

    def test_guards(self) -> None:
        """Test the n and k guards."""
        with pytest.raises(GuardExceededError):
            build_nc_k(5, 2)
        with pytest.raises(GuardExceededError):
            build_nc_k(3, 4)

    def test_k_positive(self) -> None:
        """Test that k = 0 is rejected."""
        with pytest.raises(KDivisibleError, match="positive"):
            build_pp_k(3, 0)


class TestEdelman:
    """Tests for the divisible subposets of NC_kn and the parking poset."""

    def test_nc(self) -> None:
        """Test the three even partitions of 4 points."""
        poset = edelman_divisible(2, 2, "nc")
        assert len(poset) == 3
        assert poset.rank_sizes() == (1, 2)

    @pytest.mark.parametrize(("n", "k"), [(2, 2), (3, 2), (2, 3)])
    def test_agreement(self, n: int, k: int) -> None:
        """Test equal rank sizes with NC_n^(k)."""
        assert edelman_agreement(n, k)

    def test_pp(self) -> None:
        """Test the 13 parking elements on 4 points with even blocks."""
        assert len(edelman_divisible(2, 2, "pp")) == 13

    def test_unknown_kind(self) -> None:
        """Test that the kind must be nc or pp."""
        with pytest.raises(KDivisibleError, match="Unknown kind"):
            edelman_divisible(2, 2, "tree")  # type: ignore[arg-type]


class TestPrimes:
    """Tests for prime elements and characters."""

    def test_prime_count(self) -> None:
        """Test (kn - 1)^(n - 1) = 25 primes at n = 3, k = 2."""
        assert len(k_prime_filter(build_pp_k(3, 2))) == 25

    def test_prime_reads_the_bottom(self) -> None:
        """Test that primes are read off pi_1: 25 elements, against 7 for pi_k."""
        elements = [cast(KChainPP, x) for x in build_pp_k(3, 2).elements]
        bottom = [x for x in elements if 3 in x.partitions.chain[0].block_of(1)]
        top = [x for x in elements if 3 in x.partitions.top.block_of(1)]
        assert sum(1 for x in elements if x.is_prime()) == len(bottom) == 25
        assert len(top) == 7

    def test_prime_filter_needs_chains(self) -> None:
        """Test that a plain parking poset is rejected."""
        with pytest.raises(KDivisibleError):
            k_prime_filter(build_pp_poset(2))

    def test_prime_table(self) -> None:
        """Test that fixed primes, fixed words and the formula agree."""
        rows = k_prime_table(3, 2)
        assert len(rows) == 3
        assert all(row["match"] for row in rows)
        assert max(row["chains"] for row in rows) == 25

    def test_homology_n2(self) -> None:
        """Test kn - 1 = 3 points of reduced homology in degree 0."""
        assert pp_k_order_complex(2, 2).homology_ranks() == {-1: 0, 0: 3}

    def test_character_table_n2(self) -> None:
        """Test the sign-twisted prime character at n = 2, k = 2."""
        rows = kdivisible_character_table(2, 2)
        assert all(row["match"] for row in rows)
        assert sorted(row["lefschetz"] for row in rows) == [-1, 3]

    @pytest.mark.slow
    def test_character_table_n3(self) -> None:
        """Test the sign-twisted prime character at n = 3, k = 2."""
        assert all(row["match"] for row in kdivisible_character_table(3, 2))

    def test_homology_guard(self) -> None:
        """Test the homology guard."""
        with pytest.raises(GuardExceededError):
            pp_k_order_complex(4, 2)

    @pytest.mark.parametrize(("n", "k"), [(2, 2), (3, 2), (2, 3)])
    def test_report(self, n: int, k: int) -> None:
        """Test the combined report."""
        report = verify_kdivisible(n, k)
        assert report.passed
        assert report.primes == (k * n - 1) ** (n - 1)
