"""Chain counts, k-parking trees, generating series and characters."""

from src.enumeration.characters import (
    CHARACTER_KINDS,
    CharacterError,
    character_eval,
    character_oracle,
    character_table,
    fixed_multichains,
    fixed_prime_word_count,
)
from src.enumeration.formulas import (
    EnumerationError,
    chain_count_closed,
    chain_counts_oracle,
    count_table,
    dimension_identity_check,
    mobius_closed,
    mobius_oracle,
    whitney_first_closed,
    whitney_first_oracle,
    whitney_second_closed,
    zeta_closed,
)
from src.enumeration.ktrees import (
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
from src.enumeration.series import (
    SeriesError,
    SeriesReport,
    TruncatedSeries,
    chain_series,
    forest_series,
    intermediate_equation_holds,
    inverse_series,
    series_counts,
    species_series,
    verify_series,
)

__all__ = [
    "CHARACTER_KINDS",
    "CharacterError",
    "EnumerationError",
    "KTreeCode",
    "KTreeError",
    "SeriesError",
    "SeriesReport",
    "TruncatedSeries",
    "chain_count_closed",
    "chain_counts_oracle",
    "chain_series",
    "chain_to_ktree",
    "character_eval",
    "character_oracle",
    "character_table",
    "code_to_ktree",
    "count_table",
    "dimension_identity_check",
    "enumerate_ktrees",
    "fixed_multichains",
    "fixed_prime_word_count",
    "forest_series",
    "intermediate_equation_holds",
    "inverse_series",
    "ktree_code",
    "ktree_counts",
    "ktree_to_chain",
    "mobius_closed",
    "mobius_oracle",
    "relation_tree",
    "series_counts",
    "species_series",
    "verify_series",
    "whitney_first_closed",
    "whitney_first_oracle",
    "whitney_second_closed",
    "zeta_closed",
]
