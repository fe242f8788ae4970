"""Order complexes of proper parts and the characters carried by their homology."""

import logging
from collections.abc import Callable, Hashable, Sequence
from functools import cache
from math import factorial, prod
from typing import Any, cast

from src.config import LOGGER_NAME, MAX_ORDER_COMPLEX_SIZE, MAX_WHITNEY_MODULE_N, check_guard
from src.nc.numbers import catalan
from src.nc.partitions import enumerate_noncrossing, kreweras
from src.nc.permutations import Permutation
from src.parking.conversions import act
from src.parking.objects import NC2Pair
from src.poset.finite import FinitePoset
from src.poset.parking_poset import build_pp_poset
from src.topology.complex import ChainComplex, HomologyError, Simplex

logger = logging.getLogger(LOGGER_NAME)


def proper_part(poset: FinitePoset) -> list[int]:
    """Indices other than the bottom and the top, when those exist."""
    ends = {poset.bottom, poset.top} - {None}
    return [i for i in range(len(poset)) if i not in ends]


def strict_chains(poset: FinitePoset, indices: Sequence[int]) -> list[Simplex]:
    """Nonempty strict chains inside indices, each listed by increasing rank."""
    allowed = sorted(indices, key=lambda i: (poset.ranks[i], i))
    above = {
        x: [y for y in allowed if x != y and poset.leq[x, y]]
        for x in allowed
    }
    chains: list[Simplex] = []

    def extend(chain: Simplex) -> None:
        chains.append(chain)
        for y in above[chain[-1]]:
            extend((*chain, y))

    for x in allowed:
        extend((x,))
    return chains


def order_complex(poset: FinitePoset) -> ChainComplex:
    """Order complex of the proper part: strict chains as simplices.

    Raises:
        GuardExceededError: If the poset exceeds the order-complex guard
    """
    check_guard("|P|", len(poset), MAX_ORDER_COMPLEX_SIZE)
    complex_ = ChainComplex(strict_chains(poset, proper_part(poset)), name=f"O({poset.name})")
    logger.info("Order complex of %s: dimensions %s", poset.name, complex_.dimensions())
    return complex_


@cache
def pp_order_complex(n: int) -> ChainComplex:
    """Order complex of the proper part of the parking poset on n points."""
    return order_complex(build_pp_poset(n))


def fixed_indices(
    poset: FinitePoset, action: Callable[[Hashable], Hashable]
) -> list[int]:
    """Indices of the elements fixed by action."""
    return [i for i, x in enumerate(poset.elements) if action(x) == x]


def lefschetz_number(poset: FinitePoset, fixed: Sequence[int]) -> int:
    """Sum over m >= -1 of (-1)^m times the number of fixed m-simplices.

    Chains are rank-strict, so a chain fixed as a set is fixed pointwise and
    every fixed simplex contributes +1 to the trace.
    """
    keep = set(fixed)
    chains = strict_chains(poset, [i for i in proper_part(poset) if i in keep])
    return -1 + sum((-1) ** (len(c) - 1) for c in chains)


def hopf_character(poset: FinitePoset, complex_: ChainComplex, fixed: Sequence[int]) -> int:
    """Trace on the only nonzero reduced homology group, by the Hopf trace formula.

    Raises:
        HomologyError: If homology is not concentrated in one degree
    """
    degree = complex_.concentrated_degree()
    if degree is None:
        raise HomologyError(
            f"Homology of {complex_.name} is not concentrated: {complex_.homology_ranks()}"
        )
    return (-1) ** degree * lefschetz_number(poset, fixed)


def lefschetz_character(n: int, sigma: Permutation) -> int:
    """Character of sigma on the top homology of the proper parking poset.

    Raises:
        HomologyError: If the homology is not concentrated
        GuardExceededError: If n exceeds the poset guard
    """
    poset = build_pp_poset(n)
    fixed = fixed_indices(poset, lambda x: act(sigma, cast(NC2Pair, x)))
    return hopf_character(poset, pp_order_complex(n), fixed)


def whitney_module_dims(n: int) -> list[int]:
    """Dimensions of the Whitney modules, rank by rank.

    The rank-ell module is induced from the stabilizers of the partitions
    with ell + 1 blocks, each weighted by the Catalan product over K(pi).

    Raises:
        GuardExceededError: If n exceeds the Whitney-module guard
    """
    check_guard("n", n, MAX_WHITNEY_MODULE_N)
    dims = [0] * n
    for pi in enumerate_noncrossing(n):
        weight = prod(catalan(len(b) - 1) for b in kreweras(pi).blocks)
        induced = factorial(n) // prod(factorial(len(b)) for b in pi.blocks)
        dims[pi.num_blocks - 1] += weight * induced
    return dims


def whitney_alternating_sum(n: int) -> int:
    """(-1)^(n-1) sum_ell (-1)^ell dim W_ell, the top homology rank."""
    return (-1) ** (n - 1) * sum((-1) ** ell * d for ell, d in enumerate(whitney_module_dims(n)))


def homology_table(complex_: ChainComplex) -> list[dict[str, Any]]:
    """Rows (degree, chains, rank) for m = -1..top."""
    dims = complex_.dimensions()
    return [
        {"degree": m, "chains": dims[m], "rank": r}
        for m, r in complex_.homology_ranks().items()
    ]
