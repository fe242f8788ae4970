"""Tests for cluster parking functions and their complex."""

import pytest

from src.config import GuardExceededError
from src.nc.partitions import NoncrossingPartition
from src.nc.permutations import Permutation
from src.parking import NC2Pair
from src.topology import (
    AlternatingForest,
    ClusterParkingFunction,
    cluster_character,
    cluster_complex,
    cluster_poset,
    cluster_whitney,
    ideals_are_boolean,
    lefschetz_character,
    pp_order_complex,
    support_is_injective,
    verify_cluster,
)


class TestClusterParkingFunction:
    """Tests for the matching condition."""

    def test_empty_forest_matches_bottom(self, bottom3: NC2Pair) -> None:
        """Test that the empty forest sits over 0_3 = K(1_3)."""
        pair = ClusterParkingFunction(forest=AlternatingForest(n=3), phi=bottom3)
        assert pair.rank == 0

    def test_mismatch(self, bottom3: NC2Pair) -> None:
        """Test that the forest must match the parking element."""
        forest = AlternatingForest(n=3, edges=((1, 3),))
        with pytest.raises(ValueError, match="!="):
            ClusterParkingFunction(forest=forest, phi=bottom3)

    def test_act(self, transposition3: Permutation) -> None:
        """Test that the action moves only the parking element."""
        forest = AlternatingForest(n=3, edges=((1, 3),))
        pi = NoncrossingPartition.from_blocks(3, [(1,), (2, 3)])
        phi = NC2Pair(pi=pi, sigma=Permutation.identity(3))
        moved = ClusterParkingFunction(forest=forest, phi=phi).act(transposition3)
        assert moved.forest == forest
        assert moved.phi.pi == pi


class TestClusterPoset:
    """Tests for the poset and complex of cluster parking functions."""

    @pytest.mark.parametrize(("n", "expected"), [(2, [1, 2]), (3, [1, 9, 12])])
    def test_whitney(self, n: int, expected: list[int]) -> None:
        """Test rank sizes against the signed Whitney numbers of the first kind."""
        assert cluster_whitney(n) == expected

    @pytest.mark.slow
    def test_whitney_n4(self) -> None:
        """Test rank sizes on 4 points."""
        assert cluster_whitney(4) == [1, 28, 120, 120]

    @pytest.mark.parametrize("n", [2, 3])
    def test_simplicial(self, n: int) -> None:
        """Test boolean ideals and injective supports."""
        poset = cluster_poset(n)
        assert ideals_are_boolean(poset)
        assert support_is_injective(poset)

    def test_homology_matches_order_complex(self) -> None:
        """Test that both complexes have the same reduced Betti numbers."""
        assert cluster_complex(3).homology_ranks() == pp_order_complex(3).homology_ranks()

    def test_character(
        self, identity3: Permutation, transposition3: Permutation, three_cycle: Permutation
    ) -> None:
        """Test that the cluster character equals the order-complex character."""
        for sigma in (identity3, transposition3, three_cycle):
            assert cluster_character(3, sigma) == lefschetz_character(3, sigma)

    def test_report(self) -> None:
        """Test the combined report on 3 points."""
        report = verify_cluster(3)
        assert report.passed
        assert report.elements == 22
        assert report.whitney == (1, 9, 12)

    def test_guard(self) -> None:
        """Test the cluster guard."""
        with pytest.raises(GuardExceededError):
            cluster_poset(5)
