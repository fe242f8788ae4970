"""Noncrossing partitions, permutations and number kernels."""

from src.nc.numbers import binomial, catalan, combinatorial_number, fuss_catalan, stirling2
from src.nc.partitions import (
    NoncrossingPartition,
    NonRealizablePermutationError,
    PartitionError,
    SetPartition,
    WeakComposition,
    el_label,
    embed_permutation,
    enumerate_noncrossing,
    enumerate_set_partitions,
    kreweras,
    lukasiewicz_decode,
    lukasiewicz_encode,
    nc_leq,
    nc_mobius,
    partition_of_permutation,
    relative_kreweras,
)
from src.nc.permutations import (
    Permutation,
    all_permutations,
    cycle_type_representatives,
    permutation_code,
)

__all__ = [
    "NoncrossingPartition",
    "NonRealizablePermutationError",
    "PartitionError",
    "Permutation",
    "SetPartition",
    "WeakComposition",
    "all_permutations",
    "binomial",
    "catalan",
    "combinatorial_number",
    "cycle_type_representatives",
    "el_label",
    "embed_permutation",
    "enumerate_noncrossing",
    "enumerate_set_partitions",
    "fuss_catalan",
    "kreweras",
    "lukasiewicz_decode",
    "lukasiewicz_encode",
    "nc_leq",
    "nc_mobius",
    "partition_of_permutation",
    "permutation_code",
    "relative_kreweras",
    "stirling2",
]
