"""Finite posets and the parking poset."""

from src.poset.export import to_dot, to_frame, to_json
from src.poset.finite import (
    TOP,
    FinitePoset,
    HatTop,
    PosetError,
    maximal_chains,
    mobius,
    multichains_by_top_rank,
    whitney,
    zeta_count,
)
from src.poset.parking_poset import (
    HatElement,
    build_pp_poset,
    descend,
    lower_set,
    nc_poset,
    pp_join,
    pp_leq,
    pp_leq_definition,
    pp_meet,
    pp_rank,
    pp_upper_covers,
)
from src.poset.permutahedron import (
    is_isomorphism,
    permutahedron_face_poset,
    right_comb_subposet,
)

__all__ = [
    "TOP",
    "FinitePoset",
    "HatElement",
    "HatTop",
    "PosetError",
    "build_pp_poset",
    "descend",
    "is_isomorphism",
    "lower_set",
    "maximal_chains",
    "mobius",
    "multichains_by_top_rank",
    "nc_poset",
    "permutahedron_face_poset",
    "pp_join",
    "pp_leq",
    "pp_leq_definition",
    "pp_meet",
    "pp_rank",
    "pp_upper_covers",
    "right_comb_subposet",
    "to_dot",
    "to_frame",
    "to_json",
    "whitney",
    "zeta_count",
]
