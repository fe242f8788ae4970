"""Closed-form chain counts of the parking poset and their brute-force oracles."""

import logging
from math import factorial, prod

from src.config import LOGGER_NAME
from src.nc.numbers import binomial, fuss_catalan, stirling2
from src.nc.partitions import enumerate_noncrossing, kreweras
from src.poset.finite import mobius, multichains_by_top_rank, whitney
from src.poset.parking_poset import build_pp_poset

logger = logging.getLogger(LOGGER_NAME)


class EnumerationError(ValueError):
    """Raised when a counting formula is evaluated out of range."""

    pass


def _check_rank(n: int, ell: int) -> None:
    if n < 1:
        raise EnumerationError(f"n must be positive, got {n}")
    if not 0 <= ell <= n - 1:
        raise EnumerationError(f"rank {ell} outside 0..{n - 1}")


def chain_count_closed(n: int, k: int, ell: int) -> int:
    """Number of multichains phi_1 <= ... <= phi_k with rk(phi_k) = ell.

    ell! binom(kn, ell) S_2(n, ell + 1), with the binomial taken as a
    polynomial in k so that k = -1 is allowed.

    Raises:
        EnumerationError: If ell is outside 0..n-1
    """
    _check_rank(n, ell)
    return factorial(ell) * binomial(k * n, ell) * stirling2(n, ell + 1)


def whitney_second_closed(n: int, ell: int) -> int:
    """W_ell = ell! binom(n, ell) S_2(n, ell + 1)."""
    return chain_count_closed(n, 1, ell)


def whitney_first_closed(n: int, ell: int) -> int:
    """w_ell = (-1)^ell ell! binom(n + ell - 1, ell) S_2(n, ell + 1).

    This is the chain count at k = -1. The variant with binom(n + ell - 1, n)
    disagrees with the Mobius oracle (it gives -3 instead of -9 at n = 3,
    ell = 1) and is not used.

    Raises:
        EnumerationError: If ell is outside 0..n-1
    """
    return chain_count_closed(n, -1, ell)


def zeta_closed(n: int, k: int) -> int:
    """Z(PP_n, k + 1) = (nk + 1)^(n - 1), the number of k-multichains."""
    return (n * k + 1) ** (n - 1)


def mobius_closed(n: int) -> int:
    """mu of the parking poset with a top adjoined: (-1)^n (n - 1)^(n - 1)."""
    return (-1) ** n * (n - 1) ** (n - 1)


def chain_counts_oracle(n: int, k: int) -> dict[int, int]:
    """k-multichain counts by top rank, from the built poset.

    Raises:
        GuardExceededError: If n exceeds the poset guard
    """
    return multichains_by_top_rank(build_pp_poset(n), k)


def whitney_first_oracle(n: int) -> list[int]:
    """Sum of mu(0, phi) over each rank, from the built poset."""
    poset = build_pp_poset(n)
    return [whitney(poset, "first", ell) for ell in range(n)]


def mobius_oracle(n: int) -> int:
    """mu(0, TOP) in the poset with a top adjoined."""
    hat = build_pp_poset(n).with_top()
    bottom = hat.bottom
    if bottom is None:
        raise EnumerationError(f"PP_{n} has no bottom")
    return mobius(hat, bottom, len(hat) - 1)


def dimension_identity_check(n: int, k: int) -> bool:
    """Evaluate both sides of the Park^(k) decomposition at the identity.

    sum over pi in NC_n of prod_{b in K(pi)} C^(k)_{|b|} * n! / prod_{b in pi} |b|!
    against (kn + 1)^(n - 1).
    """
    total = 0
    for pi in enumerate_noncrossing(n):
        weight = prod(fuss_catalan(len(b), k) for b in kreweras(pi).blocks)
        total += weight * factorial(n) // prod(factorial(len(b)) for b in pi.blocks)
    expected = zeta_closed(n, k)
    if total != expected:
        logger.warning("Dimension identity fails at n=%d k=%d: %d != %d", n, k, total, expected)
    return total == expected


def count_table(n: int, k: int) -> list[dict[str, int]]:
    """Rows (n, k, ell, closed, oracle) for every rank."""
    oracle = chain_counts_oracle(n, k)
    return [
        {
            "n": n,
            "k": k,
            "ell": ell,
            "closed": chain_count_closed(n, k, ell),
            "oracle": oracle.get(ell, 0),
        }
        for ell in range(n)
    ]
