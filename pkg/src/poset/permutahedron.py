"""The face poset of the permutahedron and its copy among right-comb trees."""

import logging
from itertools import permutations
from typing import cast

import numpy as np

from src.config import LOGGER_NAME, MAX_PP_POSET_N, check_guard
from src.nc.partitions import enumerate_set_partitions
from src.parking.conversions import pair_to_tree, to_pair
from src.parking.objects import NC2Pair
from src.parking.trees import Composition, composition_to_right_comb, is_right_comb
from src.poset.finite import FinitePoset
from src.poset.parking_poset import build_pp_poset

logger = logging.getLogger(LOGGER_NAME)


def ordered_set_compositions(n: int) -> list[Composition]:
    """All ordered set partitions of {1..n}, sorted by number of parts then lexicographically."""
    result: list[Composition] = []
    for partition in enumerate_set_partitions(n):
        result.extend(tuple(order) for order in permutations(partition.blocks))
    return sorted(result, key=lambda c: (len(c), c))


def coarsens(x: Composition, y: Composition) -> bool:
    """True if the parts of x are unions of consecutive runs of parts of y."""
    remaining = list(y)
    for part in x:
        target = set(part)
        collected: set[int] = set()
        while remaining and collected < target:
            nxt = set(remaining.pop(0))
            if not nxt <= target:
                return False
            collected |= nxt
        if collected != target:
            return False
    return not remaining


def permutahedron_face_poset(n: int) -> FinitePoset:
    """Ordered set compositions under merging of adjacent parts.

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_PP_POSET_N)
    faces = ordered_set_compositions(n)
    return FinitePoset.from_relation(
        faces, coarsens, [len(c) - 1 for c in faces], name=f"Perm_{n}"
    )


def right_comb_witness(n: int) -> dict[Composition, NC2Pair]:
    """Isomorphism witness: each composition and its right-comb element."""
    return {
        c: to_pair(composition_to_right_comb(n, c)) for c in ordered_set_compositions(n)
    }


def right_comb_subposet(n: int) -> tuple[FinitePoset, dict[Composition, NC2Pair]]:
    """The induced subposet of the parking poset on right combs, with witness.

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    poset = build_pp_poset(n)
    indices = [
        i for i, p in enumerate(poset.elements)
        if isinstance(p, NC2Pair) and is_right_comb(pair_to_tree(p))
    ]
    sub = poset.subposet(indices, name=f"RightComb_{n}")
    return sub, right_comb_witness(n)


def is_isomorphism(face: FinitePoset, combs: FinitePoset, witness: dict[Composition, NC2Pair]) -> bool:
    """Check that the witness is a rank-preserving order isomorphism."""
    if len(face) != len(combs) or set(witness.values()) != set(combs.elements):
        return False
    image = [combs.index_of(witness[cast(Composition, c)]) for c in face.elements]
    if any(face.ranks[i] != combs.ranks[j] for i, j in enumerate(image)):
        return False
    return bool((combs.leq[np.ix_(image, image)] == face.leq).all())
