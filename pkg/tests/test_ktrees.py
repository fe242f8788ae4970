"""Tests for k-parking trees, their multichains and their codes."""

import pytest

from src.enumeration import (
    KTreeCode,
    KTreeError,
    chain_to_ktree,
    code_to_ktree,
    enumerate_ktrees,
    ktree_code,
    ktree_counts,
    ktree_to_chain,
    relation_tree,
)
from src.parking import NC2Pair, enumerate_parking, to_pair
from src.poset import pp_leq


class TestCounts:
    """Tests for tree counts by number of nonempty nodes."""

    @pytest.mark.parametrize(
        ("n", "k", "expected"),
        [(3, 1, {0: 1, 1: 9, 2: 6}), (3, 2, {0: 1, 1: 18, 2: 30}), (2, 3, {0: 1, 1: 6})],
    )
    def test_counts(self, n: int, k: int, expected: dict[int, int]) -> None:
        """Test that trees are counted like multichains by top rank."""
        assert ktree_counts(n, k) == expected

    def test_total(self) -> None:
        """Test (kn + 1)^(n - 1) trees."""
        assert len(enumerate_ktrees(3, 3)) == 100


class TestChains:
    """Tests for the tree <-> multichain bijection."""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_round_trip(self, k: int) -> None:
        """Test tree -> multichain -> tree on 3 points."""
        for tree in enumerate_ktrees(3, k):
            chain = ktree_to_chain(tree)
            assert len(chain) == k
            assert chain_to_ktree(chain) == tree

    def test_top_rank(self) -> None:
        """Test that the top of the chain has rank nonempty count minus one."""
        for tree in enumerate_ktrees(3, 2):
            assert ktree_to_chain(tree)[-1].rank == tree.nonempty_count - 1

    def test_one_tree_is_its_pair(self) -> None:
        """Test that for k = 1 the chain is the tree's own pair."""
        for tree in enumerate_ktrees(3, 1):
            assert ktree_to_chain(tree) == (to_pair(tree),)

    def test_chains_are_distinct(self) -> None:
        """Test that distinct 2-trees give distinct multichains."""
        chains = {ktree_to_chain(t) for t in enumerate_ktrees(3, 2)}
        assert len(chains) == 49

    @pytest.mark.slow
    def test_round_trip_n4(self) -> None:
        """Test the bijection for 2-trees on 4 points."""
        for tree in enumerate_ktrees(4, 2):
            assert chain_to_ktree(ktree_to_chain(tree)) == tree

    def test_relation_tree(self, bottom3: NC2Pair, sample_pair: NC2Pair) -> None:
        """Test the 2-tree witnessing a relation."""
        tree = relation_tree(bottom3, sample_pair)
        assert tree.k == 2
        assert ktree_to_chain(tree) == (bottom3, sample_pair)

    def test_relation_trees_cover_the_order(self) -> None:
        """Test one 2-tree per related pair."""
        elements = enumerate_parking(3)
        related = [(a, b) for a in elements for b in elements if pp_leq(a, b)]
        assert len({relation_tree(a, b) for a, b in related}) == len(related) == 49

    def test_empty_chain(self) -> None:
        """Test that a multichain needs an element."""
        with pytest.raises(KTreeError, match="at least one"):
            chain_to_ktree([])

    def test_not_a_multichain(self, bottom3: NC2Pair, sample_pair: NC2Pair) -> None:
        """Test that a decreasing pair is rejected."""
        with pytest.raises(KTreeError, match="not a multichain"):
            chain_to_ktree([sample_pair, bottom3])


class TestCodes:
    """Tests for the leaf-deletion code."""

    @pytest.mark.parametrize(("n", "k"), [(3, 1), (3, 2), (4, 1), (2, 3)])
    def test_round_trip(self, n: int, k: int) -> None:
        """Test tree -> code -> tree."""
        for tree in enumerate_ktrees(n, k):
            assert code_to_ktree(ktree_code(tree)) == tree

    def test_codes_are_distinct(self) -> None:
        """Test that codes separate trees."""
        codes = {ktree_code(t) for t in enumerate_ktrees(3, 2)}
        assert len(codes) == 49

    def test_ell(self) -> None:
        """Test that the code length is the nonempty count minus one."""
        for tree in enumerate_ktrees(3, 2):
            assert ktree_code(tree).ell == tree.nonempty_count - 1

    def test_single_vertex(self) -> None:
        """Test the code of the tree with one vertex."""
        code = KTreeCode(n=3, k=2, blocks=((1, 2, 3),), used=(), word=())
        assert code_to_ktree(code).nonempty_count == 1

    def test_word_must_be_permutation(self) -> None:
        """Test that the deletion word is a permutation."""
        with pytest.raises(ValueError, match="not a permutation"):
            KTreeCode(n=2, k=1, blocks=((1,), (2,)), used=(1,), word=(2,))

    def test_half_edges_in_range(self) -> None:
        """Test that half-edges are numbered 1..kn."""
        with pytest.raises(ValueError, match="must lie in"):
            KTreeCode(n=2, k=1, blocks=((1,), (2,)), used=(3,), word=(1,))

    def test_blocks_sorted_by_minimum(self) -> None:
        """Test that vertices are listed by their minima."""
        with pytest.raises(ValueError, match="sorted by their minima"):
            KTreeCode(n=2, k=1, blocks=((2,), (1,)), used=(1,), word=(1,))

    def test_one_half_edge_per_child(self) -> None:
        """Test that every vertex but the root uses one half-edge."""
        with pytest.raises(ValueError, match="need 1 half-edges"):
            KTreeCode(n=2, k=1, blocks=((1,), (2,)), used=(), word=())
