"""Exhaustive generation of parking objects at desk scale."""

import logging
from itertools import product

from src.config import LOGGER_NAME, MAX_PARKING_ENUM_N, check_guard
from src.nc.partitions import enumerate_noncrossing
from src.nc.permutations import Permutation, all_permutations
from src.parking.objects import KParkingWord, NC2Pair, ParkingWord

logger = logging.getLogger(LOGGER_NAME)


def is_parking_sequence(word: tuple[int, ...], k: int = 1) -> bool:
    """Plain-tuple version of the k-parking condition, used for filtering."""
    return all(
        a <= k * (j - 1) + 1 for j, a in enumerate(sorted(word), start=1)
    ) and all(a >= 1 for a in word)


def enumerate_parking(n: int) -> list[NC2Pair]:
    """Return every element of the parking poset on n points as pairs.

    Elements are ordered by pi (in NC_n order), then by sigma
    lexicographically.

    Args:
        n: Ground-set size, 1 <= n <= MAX_PARKING_ENUM_N

    Returns:
        The (n+1)^(n-1) pairs (pi, sigma)

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_PARKING_ENUM_N)
    perms = list(all_permutations(n))
    elements: list[NC2Pair] = []
    for pi in enumerate_noncrossing(n):
        for sigma in perms:
            if all(
                sigma.word[a - 1] < sigma.word[b - 1]
                for block in pi.blocks
                for a, b in zip(block, block[1:], strict=False)
            ):
                elements.append(NC2Pair(pi=pi, sigma=sigma))
    logger.debug("Generated %d parking pairs for n=%d", len(elements), n)
    return elements


def enumerate_parking_words(n: int, k: int = 1) -> list[KParkingWord]:
    """Return all k-parking words of length n in lexicographic order.

    For k = 1 the items are ParkingWord instances.

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_PARKING_ENUM_N)
    alphabet = range(1, k * (n - 1) + 2)
    words = [w for w in product(alphabet, repeat=n) if is_parking_sequence(w, k)]
    if k == 1:
        return [ParkingWord(word=w) for w in words]
    return [KParkingWord(word=w, k=k) for w in words]


def fixed_words(s: Permutation, k: int = 1) -> list[tuple[int, ...]]:
    """k-parking words constant on every cycle of s, i.e. fixed by s."""
    cycles = s.cycles()
    alphabet = range(1, k * (s.n - 1) + 2)
    result: list[tuple[int, ...]] = []
    for letters in product(alphabet, repeat=len(cycles)):
        word = [0] * s.n
        for letter, cycle in zip(letters, cycles, strict=True):
            for x in cycle:
                word[x - 1] = letter
        if is_parking_sequence(tuple(word), k):
            result.append(tuple(word))
    return result
