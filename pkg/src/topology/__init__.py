"""Chain complexes, order complexes, alternating forests and cluster parking functions."""

from src.topology.cluster import (
    ClusterParkingFunction,
    ClusterReport,
    cluster_character,
    cluster_complex,
    cluster_poset,
    cluster_whitney,
    ideals_are_boolean,
    support_is_injective,
    verify_cluster,
)
from src.topology.complex import ChainComplex, HomologyError, exact_rank, homology_ranks, smith_torsion
from src.topology.forests import (
    AlternatingForest,
    alternating_forests,
    boundary_forests,
    facets,
    fiber_identity_holds,
    forest_complex,
    forest_whitney,
    forest_whitney_relation_holds,
    is_cone,
    right_branch_check,
    right_branch_sizes,
)
from src.topology.order_complex import (
    homology_table,
    hopf_character,
    lefschetz_character,
    order_complex,
    pp_order_complex,
    whitney_alternating_sum,
    whitney_module_dims,
)

__all__ = [
    "AlternatingForest",
    "ChainComplex",
    "ClusterParkingFunction",
    "ClusterReport",
    "HomologyError",
    "alternating_forests",
    "boundary_forests",
    "cluster_character",
    "cluster_complex",
    "cluster_poset",
    "cluster_whitney",
    "exact_rank",
    "facets",
    "fiber_identity_holds",
    "forest_complex",
    "forest_whitney",
    "forest_whitney_relation_holds",
    "homology_ranks",
    "homology_table",
    "hopf_character",
    "ideals_are_boolean",
    "is_cone",
    "lefschetz_character",
    "order_complex",
    "pp_order_complex",
    "right_branch_check",
    "right_branch_sizes",
    "smith_torsion",
    "support_is_injective",
    "verify_cluster",
    "whitney_alternating_sum",
    "whitney_module_dims",
]
