"""Tests for closed-form counts, their oracles and the character tables."""

import pytest
from hypothesis import given
from hypothesis.strategies import integers

from src.enumeration import (
    CHARACTER_KINDS,
    CharacterError,
    EnumerationError,
    chain_count_closed,
    character_eval,
    character_oracle,
    character_table,
    count_table,
    dimension_identity_check,
    fixed_multichains,
    fixed_prime_word_count,
    mobius_closed,
    mobius_oracle,
    whitney_first_closed,
    whitney_first_oracle,
    whitney_second_closed,
    zeta_closed,
)
from src.nc.permutations import Permutation


class TestClosedForms:
    """Tests for the closed-form chain counts."""

    @pytest.mark.parametrize(
        ("k", "expected"), [(1, [1, 9, 6]), (2, [1, 18, 30]), (3, [1, 27, 72])]
    )
    def test_chain_counts_n3(self, k: int, expected: list[int]) -> None:
        """Test the k-multichain counts on 3 points by top rank."""
        assert [chain_count_closed(3, k, ell) for ell in range(3)] == expected

    def test_whitney_second(self) -> None:
        """Test that the second kind is the rank sizes."""
        assert [whitney_second_closed(4, ell) for ell in range(4)] == [1, 28, 72, 24]

    @pytest.mark.parametrize(
        ("n", "expected"), [(2, [1, -2]), (3, [1, -9, 12]), (4, [1, -28, 120, -120])]
    )
    def test_whitney_first(self, n: int, expected: list[int]) -> None:
        """Test the first kind, the chain count at k = -1."""
        assert [whitney_first_closed(n, ell) for ell in range(n)] == expected

    @pytest.mark.parametrize(("n", "expected"), [(1, -1), (2, 1), (3, -4), (4, 27), (5, -256)])
    def test_mobius(self, n: int, expected: int) -> None:
        """Test (-1)^n (n - 1)^(n - 1)."""
        assert mobius_closed(n) == expected

    def test_zeta(self) -> None:
        """Test (nk + 1)^(n - 1)."""
        assert zeta_closed(3, 2) == 49
        assert zeta_closed(4, 1) == 125

    def test_rank_out_of_range(self) -> None:
        """Test that ell must lie in 0..n-1."""
        with pytest.raises(EnumerationError, match="rank 3"):
            chain_count_closed(3, 1, 3)
        with pytest.raises(EnumerationError, match="positive"):
            chain_count_closed(0, 1, 0)

    @given(integers(min_value=1, max_value=7), integers(min_value=-3, max_value=5))
    def test_ranks_sum_to_zeta(self, n: int, k: int) -> None:
        """Test that summing over ranks gives (nk + 1)^(n - 1) for every integer k."""
        assert sum(chain_count_closed(n, k, ell) for ell in range(n)) == zeta_closed(n, k)

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_dimension_identity(self, n: int, k: int) -> None:
        """Test the decomposition over NC_n at the identity."""
        assert dimension_identity_check(n, k)


class TestOracles:
    """Tests comparing closed forms with the built poset."""

    @pytest.mark.parametrize(("n", "k"), [(2, 1), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)])
    def test_count_table(self, n: int, k: int) -> None:
        """Test that every row of the table agrees."""
        rows = count_table(n, k)
        assert len(rows) == n
        assert all(row["closed"] == row["oracle"] for row in rows)

    def test_count_table_values(self) -> None:
        """Test the rows at n = 3, k = 1."""
        assert [row["oracle"] for row in count_table(3, 1)] == [1, 9, 6]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_whitney_first_oracle(self, n: int) -> None:
        """Test rank sums of mu against the closed form."""
        assert whitney_first_oracle(n) == [whitney_first_closed(n, ell) for ell in range(n)]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_mobius_oracle(self, n: int) -> None:
        """Test mu(0, TOP) on the built poset."""
        assert mobius_oracle(n) == mobius_closed(n)

    @pytest.mark.slow
    def test_mobius_oracle_n5(self) -> None:
        """Test mu(0, TOP) at n = 5."""
        assert mobius_oracle(5) == -256


class TestCharacters:
    """Tests for symmetric group characters."""

    @pytest.mark.parametrize(
        ("kind", "values"),
        [
            ("park_k", (16, 4, 1)),
            ("park_prime", (4, 2, 1)),
            ("park_prime_k", (4, 2, 1)),
            ("sign_park_prime", (4, -2, 1)),
        ],
    )
    def test_values_at_k1(
        self,
        kind: str,
        values: tuple[int, int, int],
        identity3: Permutation,
        transposition3: Permutation,
        three_cycle: Permutation,
    ) -> None:
        """Test the closed forms on the three cycle types of S_3."""
        sigmas = (identity3, transposition3, three_cycle)
        assert tuple(character_eval(kind, 3, 1, s) for s in sigmas) == values

    def test_park_prime_k(self, identity3: Permutation, transposition3: Permutation) -> None:
        """Test (kn - 1)^(z - 1) at k = 2."""
        assert character_eval("park_prime_k", 3, 2, identity3) == 25
        assert character_eval("park_prime_k", 3, 2, transposition3) == 5

    @pytest.mark.parametrize("kind", CHARACTER_KINDS)
    def test_oracle_matches(self, kind: str, transposition3: Permutation) -> None:
        """Test a single oracle evaluation."""
        expected = character_eval(kind, 3, 2, transposition3)
        assert character_oracle(kind, 3, 2, transposition3) == expected

    @pytest.mark.parametrize(("n", "k"), [(2, 1), (3, 1), (3, 2), (4, 1)])
    def test_table_matches(self, n: int, k: int) -> None:
        """Test that every row of the character table agrees."""
        rows = character_table(n, k)
        assert rows
        assert all(row["match"] for row in rows)
        assert {row["kind"] for row in rows} == set(CHARACTER_KINDS)

    def test_fixed_multichains_at_identity(self, identity3: Permutation) -> None:
        """Test that the identity fixes every multichain."""
        assert fixed_multichains(3, 2, identity3) == 49
        assert fixed_multichains(3, 2, identity3, prime_bottom=True) == 25

    def test_fixed_prime_words(self, identity3: Permutation) -> None:
        """Test the prime 2-parking words on 3 points."""
        assert fixed_prime_word_count(2, identity3) == 25

    def test_unknown_kind(self, identity3: Permutation) -> None:
        """Test that an unknown character kind raises."""
        with pytest.raises(CharacterError, match="Unknown character"):
            character_eval("park_sign", 3, 1, identity3)

    def test_size_mismatch(self, identity3: Permutation) -> None:
        """Test that sigma must act on n points."""
        with pytest.raises(CharacterError, match="acts on 3 points"):
            character_oracle("park_k", 4, 1, identity3)
