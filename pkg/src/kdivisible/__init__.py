"""k-divisible noncrossing partitions and 2-partitions."""

from src.kdivisible.posets import (
    KChainNC,
    KChainPP,
    KDivisibleError,
    KDivisibleReport,
    build_nc_k,
    build_pp_k,
    descent_is_unique,
    edelman_agreement,
    edelman_divisible,
    k_prime_filter,
    k_prime_table,
    kdivisible_character,
    kdivisible_character_table,
    nc_multichain_identity,
    pp_k_order_complex,
    pp_multichain_identity,
    rank_matches_hasse,
    verify_kdivisible,
)

__all__ = [
    "KChainNC",
    "KChainPP",
    "KDivisibleError",
    "KDivisibleReport",
    "build_nc_k",
    "build_pp_k",
    "descent_is_unique",
    "edelman_agreement",
    "edelman_divisible",
    "k_prime_filter",
    "k_prime_table",
    "kdivisible_character",
    "kdivisible_character_table",
    "nc_multichain_identity",
    "pp_k_order_complex",
    "pp_multichain_identity",
    "rank_matches_hasse",
    "verify_kdivisible",
]
