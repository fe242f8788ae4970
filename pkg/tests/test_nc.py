"""Tests for noncrossing partitions, permutations and number kernels."""

import pytest
from hypothesis import given
from hypothesis.strategies import integers

from src.config import GuardExceededError
from src.nc import (
    NoncrossingPartition,
    NonRealizablePermutationError,
    PartitionError,
    Permutation,
    SetPartition,
    WeakComposition,
    all_permutations,
    binomial,
    catalan,
    combinatorial_number,
    cycle_type_representatives,
    el_label,
    embed_permutation,
    enumerate_noncrossing,
    enumerate_set_partitions,
    fuss_catalan,
    kreweras,
    lukasiewicz_decode,
    lukasiewicz_encode,
    nc_leq,
    nc_mobius,
    partition_of_permutation,
    permutation_code,
    relative_kreweras,
    stirling2,
)
from src.nc.permutations import format_word, parse_word


class TestNumbers:
    """Tests for the exact number kernels."""

    @pytest.mark.parametrize(("n", "expected"), [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
    def test_catalan(self, n: int, expected: int) -> None:
        """Test the first Catalan numbers."""
        assert catalan(n) == expected

    def test_catalan_rejects_negative(self) -> None:
        """Test that a negative index raises."""
        with pytest.raises(ValueError, match="nonnegative"):
            catalan(-1)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_fuss_catalan_two_is_catalan(self, n: int) -> None:
        """Test that the Fuss-Catalan number at k = 2 is the Catalan number."""
        assert fuss_catalan(n, 2) == catalan(n)

    @pytest.mark.parametrize(("n", "k", "expected"), [(3, 3, 12), (2, 3, 3), (4, 3, 55), (3, 1, 1)])
    def test_fuss_catalan_values(self, n: int, k: int, expected: int) -> None:
        """Test binom(kn + 1, n) / (kn + 1) at a few points."""
        assert fuss_catalan(n, k) == expected

    def test_fuss_catalan_negative_k(self) -> None:
        """Test that the product form extends to negative k."""
        assert fuss_catalan(2, -1) == -1

    @pytest.mark.parametrize(("n", "k", "expected"), [(4, 2, 7), (5, 3, 25), (3, 3, 1), (3, 0, 0), (0, 0, 1)])
    def test_stirling2(self, n: int, k: int, expected: int) -> None:
        """Test Stirling numbers of the second kind."""
        assert stirling2(n, k) == expected

    @pytest.mark.parametrize(("x", "ell", "expected"), [(5, 2, 10), (-3, 2, 6), (-3, 1, -3), (4, -1, 0)])
    def test_binomial(self, x: int, ell: int, expected: int) -> None:
        """Test the generalized binomial with integer top argument."""
        assert binomial(x, ell) == expected

    def test_combinatorial_number_dispatch(self) -> None:
        """Test dispatch by kernel name."""
        assert combinatorial_number("catalan", 4) == 14
        assert combinatorial_number("stirling2", 4, 2) == 7

    def test_combinatorial_number_unknown(self) -> None:
        """Test that an unknown kernel is rejected."""
        with pytest.raises(ValueError, match="Unknown number kind"):
            combinatorial_number("bell", 3)

    def test_combinatorial_number_arity(self) -> None:
        """Test that a wrong argument count is rejected."""
        with pytest.raises(ValueError, match="expects 2 arguments"):
            combinatorial_number("binomial", 3)


class TestPermutation:
    """Tests for the Permutation model."""

    def test_rejects_non_bijection(self) -> None:
        """Test that a repeated letter is rejected."""
        with pytest.raises(ValueError):
            Permutation(word=(1, 1, 2))

    def test_from_cycles(self) -> None:
        """Test building from cycle notation."""
        s = Permutation.from_cycles(4, [(1, 3), (2, 4)])
        assert s.word == (3, 4, 1, 2)

    def test_from_cycles_rejects_overlap(self) -> None:
        """Test that overlapping cycles are rejected."""
        with pytest.raises(ValueError, match="Invalid cycle"):
            Permutation.from_cycles(3, [(1, 2), (2, 3)])

    def test_compose_applies_right_first(self) -> None:
        """Test that s * t applies t first."""
        s = Permutation(word=(2, 3, 1))
        t = Permutation(word=(2, 1, 3))
        assert (s * t).word == (3, 2, 1)

    def test_inverse(self) -> None:
        """Test that s * s^-1 is the identity."""
        for s in all_permutations(4):
            assert s * s.inverse() == Permutation.identity(4)

    def test_cycles_and_type(self) -> None:
        """Test cycle listing and cycle type."""
        s = Permutation(word=(3, 1, 2, 4))
        assert s.cycles() == [(1, 3, 2), (4,)]
        assert s.cycle_type() == (3, 1)
        assert s.cycle_count() == 2

    def test_code(self) -> None:
        """Test the code of 15324."""
        assert permutation_code(Permutation(word=(1, 5, 3, 2, 4))) == (3, 0, 1, 0, 0)

    def test_cycle_type_representatives(self) -> None:
        """Test one representative per integer partition, longest cycles first."""
        reps = cycle_type_representatives(4)
        assert len(reps) == 5
        assert reps[0].cycle_type() == (4,)
        assert reps[-1].cycle_type() == (1, 1, 1, 1)


class TestWords:
    """Tests for word parsing and formatting."""

    def test_parse_compact(self) -> None:
        """Test parsing a compact digit string."""
        assert parse_word("1325271") == (1, 3, 2, 5, 2, 7, 1)

    def test_parse_separated(self) -> None:
        """Test parsing a comma-separated word."""
        assert parse_word("11,1,9") == (11, 1, 9)

    @pytest.mark.parametrize("text", ["", "12a"])
    def test_parse_rejects(self, text: str) -> None:
        """Test that empty or non-numeric words are rejected."""
        with pytest.raises(ValueError):
            parse_word(text)

    def test_format_switches_to_commas(self) -> None:
        """Test that letters past nine are comma-separated."""
        assert format_word((1, 2, 3)) == "123"
        assert format_word((10, 2, 1)) == "10,2,1"


class TestPartitions:
    """Tests for set and noncrossing partitions."""

    @pytest.mark.parametrize("n", range(1, 8))
    def test_noncrossing_count(self, n: int) -> None:
        """Test that NC_n has C_n elements."""
        assert len(enumerate_noncrossing(n)) == catalan(n)

    def test_set_partition_count(self) -> None:
        """Test the Bell number B_4 = 15."""
        assert len(enumerate_set_partitions(4)) == 15

    def test_noncrossing_guard(self) -> None:
        """Test that enumeration is guarded."""
        with pytest.raises(GuardExceededError):
            enumerate_noncrossing(13)

    def test_rejects_crossing(self) -> None:
        """Test that 13|24 is not noncrossing."""
        with pytest.raises(ValueError, match="crossing"):
            NoncrossingPartition.from_blocks(4, [(1, 3), (2, 4)])

    def test_rejects_non_canonical(self) -> None:
        """Test that blocks out of canonical order are rejected."""
        with pytest.raises(ValueError, match="canonical"):
            SetPartition(n=3, blocks=((2, 3), (1,)))

    def test_rejects_incomplete_cover(self) -> None:
        """Test that blocks must cover the ground set."""
        with pytest.raises(ValueError, match="do not partition"):
            SetPartition(n=3, blocks=((1, 2),))

    def test_zero_and_one(self) -> None:
        """Test the bottom and top of NC_n."""
        assert NoncrossingPartition.zero(4).blocks == ((1, 2, 3, 4),)
        assert NoncrossingPartition.one(3).blocks == ((1,), (2,), (3,))
        assert str(NoncrossingPartition.from_blocks(4, [(1, 4), (2, 3)])) == "14|23"

    def test_order_puts_zero_at_bottom(self) -> None:
        """Test that every partition lies above 0_n and below 1_n."""
        zero, one = NoncrossingPartition.zero(4), NoncrossingPartition.one(4)
        for p in enumerate_noncrossing(4):
            assert nc_leq(zero, p)
            assert nc_leq(p, one)

    def test_leq_size_mismatch(self) -> None:
        """Test that comparing different ground sets raises."""
        with pytest.raises(PartitionError):
            nc_leq(NoncrossingPartition.zero(2), NoncrossingPartition.zero(3))


class TestKreweras:
    """Tests for Kreweras complements and the embedding into S_n."""

    @pytest.mark.parametrize("n", range(1, 6))
    def test_swaps_zero_and_one(self, n: int) -> None:
        """Test K(0_n) = 1_n and K(1_n) = 0_n."""
        assert kreweras(NoncrossingPartition.zero(n)) == NoncrossingPartition.one(n)
        assert kreweras(NoncrossingPartition.one(n)) == NoncrossingPartition.zero(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_is_a_bijection(self, n: int) -> None:
        """Test that K permutes NC_n."""
        images = {kreweras(p) for p in enumerate_noncrossing(n)}
        assert len(images) == catalan(n)

    @given(integers(min_value=1, max_value=6))
    def test_block_counts_add_up(self, n: int) -> None:
        """Test |K(p)| + |p| = n + 1."""
        for p in enumerate_noncrossing(n):
            assert kreweras(p).num_blocks + p.num_blocks == n + 1

    def test_relative_from_zero(self) -> None:
        """Test K(0_n, t) = K(t)."""
        zero = NoncrossingPartition.zero(4)
        for t in enumerate_noncrossing(4):
            assert relative_kreweras(zero, t) == kreweras(t)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_relative_block_count(self, n: int) -> None:
        """Test |K(p, t)| = n - |t| + |p| for every p <= t."""
        partitions = enumerate_noncrossing(n)
        for t in partitions:
            for p in partitions:
                if nc_leq(p, t):
                    assert relative_kreweras(p, t).num_blocks == n - t.num_blocks + p.num_blocks

    def test_relative_requires_order(self) -> None:
        """Test that K(p, t) needs p <= t."""
        with pytest.raises(PartitionError, match="needs"):
            relative_kreweras(NoncrossingPartition.one(3), NoncrossingPartition.zero(3))

    def test_embedding_round_trip(self) -> None:
        """Test that the increasing-cycle embedding is recovered."""
        for p in enumerate_noncrossing(5):
            assert partition_of_permutation(embed_permutation(p)) == p

    def test_non_increasing_cycle(self) -> None:
        """Test that a decreasing cycle is not realizable."""
        with pytest.raises(NonRealizablePermutationError, match="not increasing"):
            partition_of_permutation(Permutation.from_cycles(3, [(1, 3, 2)]))

    def test_crossing_cycles(self) -> None:
        """Test that crossing cycles are not realizable."""
        with pytest.raises(NonRealizablePermutationError, match="crossing"):
            partition_of_permutation(Permutation.from_cycles(4, [(1, 3), (2, 4)]))

    @pytest.mark.parametrize(("n", "expected"), [(2, -1), (3, 2), (4, -5), (5, 14)])
    def test_mobius_of_nc(self, n: int, expected: int) -> None:
        """Test mu(0_n, 1_n) = (-1)^(n-1) C_(n-1)."""
        assert nc_mobius(NoncrossingPartition.zero(n), NoncrossingPartition.one(n)) == expected


class TestElLabel:
    """Tests for the edge labels of NC_n."""

    def test_label_of_a_merge(self) -> None:
        """Test the label of the single cover of NC_2."""
        assert el_label(NoncrossingPartition.zero(2), NoncrossingPartition.one(2)) == (1, 2)

    def test_rejects_non_cover(self) -> None:
        """Test that a non-cover is rejected."""
        with pytest.raises(PartitionError, match="not a cover"):
            el_label(NoncrossingPartition.zero(3), NoncrossingPartition.one(3))


class TestLukasiewicz:
    """Tests for the Lukasiewicz encoding."""

    def test_encode(self) -> None:
        """Test the word of 14|23."""
        p = NoncrossingPartition.from_blocks(4, [(1, 4), (2, 3)])
        assert lukasiewicz_encode(p).parts == (2, 2, 0, 0)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip(self, n: int) -> None:
        """Test that decoding inverts encoding on NC_n."""
        for p in enumerate_noncrossing(n):
            assert lukasiewicz_decode(lukasiewicz_encode(p)) == p

    def test_partial_sum_violation(self) -> None:
        """Test that a word failing the partial sums is rejected."""
        with pytest.raises(PartitionError, match="partial-sum"):
            lukasiewicz_decode(WeakComposition(parts=(0, 2, 1), n=3))
