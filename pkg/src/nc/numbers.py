"""Exact combinatorial number kernels."""

import logging
from collections.abc import Callable
from fractions import Fraction
from functools import cache
from math import comb, factorial
from typing import Final

from src.config import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)

NUMBER_KINDS: Final[tuple[str, ...]] = ("catalan", "fuss_catalan", "stirling2", "binomial")


def catalan(n: int) -> int:
    """Return the Catalan number C_n = binom(2n, n) / (n + 1).

    Args:
        n: Nonnegative index

    Returns:
        C_n as an exact integer

    Raises:
        ValueError: If n is negative
    """
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def fuss_catalan(n: int, k: int) -> int:
    """Return the Fuss-Catalan number binom(kn + 1, n) / (kn + 1).

    Evaluated through the product form prod_{i=1}^{n-1} (kn - i + 1) / n!,
    which is a polynomial in k and therefore defined for every integer k,
    negative values included. With this convention fuss_catalan(n, 2) is the
    Catalan number and fuss_catalan(n, k) counts (k - 1)-multichains of NC_n.

    Args:
        n: Nonnegative index
        k: Any integer

    Returns:
        Exact integer value

    Raises:
        ValueError: If n is negative or the product is not integral
    """
    if n < 0:
        raise ValueError(f"fuss_catalan index must be nonnegative, got {n}")
    if n == 0:
        return 1
    value = Fraction(1)
    for i in range(1, n):
        value *= k * n - i + 1
    value /= factorial(n)
    if value.denominator != 1:
        raise ValueError(f"fuss_catalan({n}, {k}) is not integral: {value}")
    return int(value)


@cache
def stirling2(n: int, k: int) -> int:
    """Return the Stirling number of the second kind S_2(n, k).

    Uses the recurrence S_2(n, k) = k S_2(n-1, k) + S_2(n-1, k-1).
    """
    if n < 0 or k < 0:
        return 0
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def binomial(x: int, ell: int) -> int:
    """Return the generalized binomial x(x-1)...(x-ell+1) / ell!.

    The top argument may be any integer, so binomial(-3, 2) == 6.

    Args:
        x: Top argument
        ell: Bottom argument

    Returns:
        Exact integer, 0 when ell < 0
    """
    if ell < 0:
        return 0
    if x >= 0:
        return comb(x, ell)
    numerator = 1
    for i in range(ell):
        numerator *= x - i
    return numerator // factorial(ell)


def combinatorial_number(kind: str, *args: int) -> int:
    """Dispatch to one of the number kernels by name.

    Args:
        kind: One of "catalan", "fuss_catalan", "stirling2", "binomial"
        *args: Positional arguments of the chosen kernel

    Returns:
        Exact integer value

    Raises:
        ValueError: If kind is unknown or the arity is wrong
    """
    kernels: dict[str, tuple[Callable[..., int], int]] = {
        "catalan": (catalan, 1),
        "fuss_catalan": (fuss_catalan, 2),
        "stirling2": (stirling2, 2),
        "binomial": (binomial, 2),
    }
    if kind not in kernels:
        raise ValueError(
            f"Unknown number kind: {kind}. Valid options: {', '.join(NUMBER_KINDS)}"
        )
    kernel, arity = kernels[kind]
    if len(args) != arity:
        raise ValueError(f"{kind} expects {arity} arguments, got {len(args)}")
    result = kernel(*args)
    logger.debug("%s%s = %d", kind, args, result)
    return result
