"""Tests for chain complexes, order complexes and alternating forests."""

from itertools import combinations

import numpy as np
import pytest

from src.config import GuardExceededError
from src.nc.numbers import catalan
from src.nc.partitions import NoncrossingPartition
from src.nc.permutations import Permutation
from src.poset import build_pp_poset
from src.topology import (
    AlternatingForest,
    ChainComplex,
    HomologyError,
    alternating_forests,
    exact_rank,
    facets,
    fiber_identity_holds,
    forest_complex,
    forest_whitney,
    forest_whitney_relation_holds,
    homology_ranks,
    homology_table,
    hopf_character,
    is_cone,
    lefschetz_character,
    pp_order_complex,
    right_branch_check,
    smith_torsion,
    whitney_alternating_sum,
    whitney_module_dims,
)

# Six-vertex projective plane
PROJECTIVE_PLANE = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]


def closure(facets_: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All nonempty faces of the given facets."""
    return {
        face
        for facet in facets_
        for size in range(1, len(facet) + 1)
        for face in combinations(facet, size)
    }


class TestChainComplex:
    """Tests for the generic chain complex."""

    def test_empty_complex(self) -> None:
        """Test that only the empty simplex carries reduced homology."""
        assert ChainComplex([]).homology_ranks() == {-1: 1}

    def test_two_points(self) -> None:
        """Test the zero-sphere."""
        complex_ = ChainComplex.from_faces([[0], [1]])
        assert complex_.homology_ranks() == {-1: 0, 0: 1}
        assert complex_.concentrated_degree() == 0

    def test_hollow_triangle(self) -> None:
        """Test the circle."""
        complex_ = ChainComplex.from_faces(closure([(0, 1), (1, 2), (0, 2)]))
        assert complex_.homology_ranks() == {-1: 0, 0: 0, 1: 1}
        assert complex_.euler_characteristic() == -1
        complex_.check_boundary()

    def test_filled_triangle(self) -> None:
        """Test that a simplex is acyclic."""
        complex_ = ChainComplex.from_faces(closure([(0, 1, 2)]))
        assert set(homology_ranks(complex_).values()) == {0}
        assert complex_.concentrated_degree() is None

    def test_missing_face(self) -> None:
        """Test that faces must be closed under subsets."""
        with pytest.raises(HomologyError, match="missing"):
            ChainComplex.from_faces([[0], [0, 1]])

    def test_projective_plane_torsion(self) -> None:
        """Test that Z/2 torsion is invisible rationally but found by Smith form."""
        complex_ = ChainComplex.from_faces(closure(PROJECTIVE_PLANE))
        assert complex_.dimensions() == {-1: 1, 0: 6, 1: 15, 2: 10}
        assert set(complex_.homology_ranks().values()) == {0}
        assert smith_torsion(complex_, 2) == [2]
        assert smith_torsion(complex_, 1) == []

    def test_exact_rank(self) -> None:
        """Test exact ranks, including empty matrices."""
        assert exact_rank(np.zeros((0, 3), dtype=np.int64)) == 0
        assert exact_rank(np.array([[1, 2], [2, 4]], dtype=np.int64)) == 1
        assert exact_rank(np.eye(3, dtype=np.int64)) == 3


class TestOrderComplex:
    """Tests for the order complex of the proper parking poset."""

    def test_dimensions_n3(self) -> None:
        """Test the chains of the proper part on 3 points."""
        assert pp_order_complex(3).dimensions() == {-1: 1, 0: 15, 1: 18}

    def test_homology_n3(self) -> None:
        """Test that homology is concentrated in the top degree with rank 4."""
        complex_ = pp_order_complex(3)
        assert complex_.homology_ranks() == {-1: 0, 0: 0, 1: 4}
        assert complex_.concentrated_degree() == 1
        assert smith_torsion(complex_, 1) == []

    @pytest.mark.slow
    def test_homology_n4(self) -> None:
        """Test rank (n - 1)^(n - 1) = 27 in degree 2."""
        complex_ = pp_order_complex(4)
        assert complex_.concentrated_degree() == 2
        assert complex_.homology_ranks()[2] == 27

    def test_homology_table(self) -> None:
        """Test one row per degree."""
        rows = homology_table(pp_order_complex(3))
        assert rows == [
            {"degree": -1, "chains": 1, "rank": 0},
            {"degree": 0, "chains": 15, "rank": 0},
            {"degree": 1, "chains": 18, "rank": 4},
        ]

    def test_lefschetz_character(
        self, identity3: Permutation, transposition3: Permutation, three_cycle: Permutation
    ) -> None:
        """Test the sign-twisted prime character on S_3."""
        assert lefschetz_character(3, identity3) == 4
        assert lefschetz_character(3, transposition3) == -2
        assert lefschetz_character(3, three_cycle) == 1

    def test_hopf_needs_concentration(self) -> None:
        """Test that split homology is rejected."""
        split = ChainComplex.from_faces(closure([(0, 1), (1, 2), (0, 2), (3,)]))
        with pytest.raises(HomologyError, match="not concentrated"):
            hopf_character(build_pp_poset(2), split, [])

    @pytest.mark.parametrize(
        ("n", "dims"), [(2, [1, 2]), (3, [1, 9, 12]), (4, [1, 28, 120, 120])]
    )
    def test_whitney_modules(self, n: int, dims: list[int]) -> None:
        """Test the Whitney module dimensions."""
        assert whitney_module_dims(n) == dims

    @pytest.mark.parametrize(("n", "expected"), [(2, 1), (3, 4), (4, 27), (5, 256)])
    def test_alternating_sum(self, n: int, expected: int) -> None:
        """Test that the alternating sum is the top homology rank."""
        assert whitney_alternating_sum(n) == expected

    def test_whitney_module_guard(self) -> None:
        """Test the Whitney module guard."""
        with pytest.raises(GuardExceededError):
            whitney_module_dims(6)


class TestForests:
    """Tests for noncrossing alternating forests."""

    def test_forests_n3(self) -> None:
        """Test the six forests on 3 points."""
        forests = alternating_forests(3)
        assert len(forests) == 6
        assert forest_whitney(3) == [1, 3, 2]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_facets_are_catalan(self, n: int) -> None:
        """Test C_(n-1) alternating trees."""
        assert len(facets(n)) == catalan(n - 1)

    def test_path_is_not_alternating(self) -> None:
        """Test that 1-2-3 rises twice and is rejected."""
        with pytest.raises(ValueError, match="do not alternate"):
            AlternatingForest(n=3, edges=((1, 2), (2, 3)))

    def test_edges_sorted(self) -> None:
        """Test that edges must be sorted."""
        with pytest.raises(ValueError, match="sorted"):
            AlternatingForest(n=3, edges=((1, 3), (1, 2)))

    def test_edge_range(self) -> None:
        """Test that edges lie inside the ground set."""
        with pytest.raises(ValueError, match="not a pair"):
            AlternatingForest(n=2, edges=((1, 3),))

    def test_underline(self) -> None:
        """Test components as a partition."""
        forest = AlternatingForest(n=3, edges=((1, 3),))
        assert forest.underline() == NoncrossingPartition.from_blocks(3, [(1, 3), (2,)])
        assert forest.rank == 1

    @pytest.mark.parametrize("n", range(2, 6))
    def test_is_cone(self, n: int) -> None:
        """Test that {1, n} is a cone point."""
        assert is_cone(n)

    def test_complex_is_acyclic(self) -> None:
        """Test that the forest complex on 4 points has no reduced homology."""
        complex_ = forest_complex(alternating_forests(4), "Delta_4")
        assert set(complex_.homology_ranks().values()) == {0}
        assert [complex_.dimensions()[m] for m in range(0, 3)] == forest_whitney(4)[1:]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_fiber_identity(self, n: int) -> None:
        """Test Catalan products over the component partition."""
        assert fiber_identity_holds(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_whitney_relation(self, n: int) -> None:
        """Test W_ell(Delta_n) = (-1)^ell w_ell(NC_n)."""
        assert forest_whitney_relation_holds(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_right_branch(self, n: int) -> None:
        """Test |b| = |RB(T_b)| + 1 on Kreweras complements."""
        assert right_branch_check(n)

    def test_forest_guard(self) -> None:
        """Test the forest guard."""
        with pytest.raises(GuardExceededError):
            alternating_forests(8)
