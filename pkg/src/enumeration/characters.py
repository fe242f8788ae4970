"""Characters of the symmetric group on multichains, evaluated two ways.

Each closed form depends only on the number z of cycles of sigma. Oracles
count the objects fixed by sigma: multichains of fixed elements of the
built poset, or parking words constant on the cycles of sigma.
"""

import logging
from typing import Any, Final, Literal, cast, get_args

import numpy as np
from numpy.typing import NDArray

from src.config import LOGGER_NAME
from src.nc.permutations import Permutation, cycle_type_representatives
from src.parking.conversions import act, is_prime, word_prime_criterion
from src.parking.generation import fixed_words
from src.parking.objects import NC2Pair
from src.poset.parking_poset import build_pp_poset

logger = logging.getLogger(LOGGER_NAME)

CharacterKind = Literal["park_k", "park_prime", "park_prime_k", "sign_park_prime"]
CHARACTER_KINDS: Final[tuple[str, ...]] = get_args(CharacterKind)


class CharacterError(ValueError):
    """Raised when a character kind is unknown or its arguments are invalid."""

    pass


def _check(kind: str, n: int, k: int, sigma: Permutation) -> None:
    if kind not in CHARACTER_KINDS:
        raise CharacterError(f"Unknown character {kind!r}; expected one of {CHARACTER_KINDS}")
    if n < 1 or k < 1:
        raise CharacterError(f"n and k must be positive, got n={n} k={k}")
    if sigma.n != n:
        raise CharacterError(f"sigma acts on {sigma.n} points, expected {n}")


def character_eval(kind: str, n: int, k: int, sigma: Permutation) -> int:
    """Closed-form character value at sigma.

    park_k: (kn + 1)^(z - 1). park_prime: (n - 1)^(z - 1).
    park_prime_k: (kn - 1)^(z - 1). sign_park_prime: (-1)^(n - z) (n - 1)^(z - 1),
    the character carried by the top homology of the proper part.

    Raises:
        CharacterError: If kind is unknown or the sizes disagree
    """
    _check(kind, n, k, sigma)
    z = sigma.cycle_count()
    if kind == "park_k":
        return (k * n + 1) ** (z - 1)
    if kind == "park_prime":
        return (n - 1) ** (z - 1)
    if kind == "park_prime_k":
        return (k * n - 1) ** (z - 1)
    return (-1) ** (n - z) * (n - 1) ** (z - 1)


def _fixed_indices(n: int, sigma: Permutation) -> list[int]:
    poset = build_pp_poset(n)
    return [
        i
        for i, x in enumerate(poset.elements)
        if act(sigma, cast(NC2Pair, x)) == x
    ]


def _chains_from(leq: NDArray[np.bool_], start: NDArray[Any], k: int) -> int:
    """Multichains x_1 <= ... <= x_k weighted by start[x_1]."""
    ends = start.astype(object)
    order = leq.astype(object)
    for _ in range(k - 1):
        ends = order.T @ ends
    return int(sum(int(v) for v in ends))


def fixed_multichains(n: int, k: int, sigma: Permutation, prime_bottom: bool = False) -> int:
    """sigma-fixed k-multichains of the parking poset.

    With prime_bottom, only multichains whose smallest element is prime count.

    Raises:
        GuardExceededError: If n exceeds the poset guard
    """
    poset = build_pp_poset(n)
    fixed = _fixed_indices(n, sigma)
    leq = poset.leq[np.ix_(fixed, fixed)]
    start = np.array(
        [1 if not prime_bottom or is_prime(cast(NC2Pair, poset.elements[i])) else 0 for i in fixed],
        dtype=object,
    )
    return _chains_from(leq, start, k)


def fixed_prime_word_count(k: int, sigma: Permutation) -> int:
    """sigma-fixed k-parking words passing the prime word criterion."""
    return sum(1 for w in fixed_words(sigma, k) if word_prime_criterion(w, k))


def character_oracle(kind: str, n: int, k: int, sigma: Permutation) -> int:
    """Character value at sigma by counting fixed objects.

    Raises:
        CharacterError: If kind is unknown, or if two fixed-point counts of
            the same character disagree
        GuardExceededError: If n exceeds the poset guard
    """
    _check(kind, n, k, sigma)
    if kind == "park_k":
        chains = fixed_multichains(n, k, sigma)
        words = len(fixed_words(sigma, k))
        if chains != words:
            logger.error("Fixed multichains %d != fixed words %d at %s", chains, words, sigma)
            raise CharacterError(f"Fixed-point counts disagree at sigma={sigma}")
        return chains
    if kind == "park_prime":
        return fixed_multichains(n, 1, sigma, prime_bottom=True)
    if kind == "park_prime_k":
        chains = fixed_multichains(n, k, sigma, prime_bottom=True)
        words = fixed_prime_word_count(k, sigma)
        if chains != words:
            logger.error("Fixed prime multichains %d != fixed prime words %d at %s", chains, words, sigma)
            raise CharacterError(f"Fixed-point counts disagree at sigma={sigma}")
        return chains
    sign = (-1) ** (n - sigma.cycle_count())
    return sign * fixed_multichains(n, 1, sigma, prime_bottom=True)


def character_table(n: int, k: int, kinds: tuple[str, ...] = CHARACTER_KINDS) -> list[dict[str, Any]]:
    """Rows (kind, n, k, cycle_type, formula, oracle, match) per cycle type."""
    rows: list[dict[str, Any]] = []
    for kind in kinds:
        for sigma in cycle_type_representatives(n):
            formula = character_eval(kind, n, k, sigma)
            oracle = character_oracle(kind, n, k, sigma)
            rows.append(
                {
                    "kind": kind,
                    "n": n,
                    "k": k,
                    "cycle_type": "".join(str(c) for c in sigma.cycle_type()),
                    "formula": formula,
                    "oracle": oracle,
                    "match": formula == oracle,
                }
            )
    return rows
