"""The parking poset of noncrossing 2-partitions.

phi <= psi iff eta_psi(k) is contained in eta_phi(k) for every k. With an
adjoined maximum the poset is a lattice: joins intersect eta sequences and
meets are joins of common lower bounds.
"""

import logging
from functools import cache, reduce
from typing import Any, cast

import numpy as np
from numpy.typing import NDArray
from pydantic import ValidationError

from src.config import LOGGER_NAME, MAX_NC_POSET_N, MAX_PP_POSET_N, check_guard
from src.nc.partitions import (
    Block,
    NoncrossingPartition,
    SetPartition,
    enumerate_noncrossing,
    nc_leq,
)
from src.nc.permutations import Permutation, all_permutations
from src.parking.conversions import AnyParking, act, convert, eta, representation_of, to_pair
from src.parking.generation import enumerate_parking
from src.parking.objects import NC2Pair, NC2Triple
from src.parking.trees import upper_cover_trees
from src.poset.finite import TOP, FinitePoset, HatTop, PosetError

logger = logging.getLogger(LOGGER_NAME)

HatElement = NC2Pair | HatTop


def _mask(block: Block) -> int:
    return sum(1 << (x - 1) for x in block)


def pp_rank(x: AnyParking) -> int:
    """Rank |pi| - 1."""
    return to_pair(x).rank


def pp_leq(a: AnyParking, b: AnyParking) -> bool:
    """a <= b iff eta_b(k) is a subset of eta_a(k) for every k.

    Raises:
        PosetError: If the sizes differ
    """
    ea, eb = eta(a), eta(b)
    if ea.n != eb.n:
        raise PosetError(f"Size mismatch: {ea.n} vs {eb.n}")
    return all(set(y) <= set(x) for x, y in zip(ea.blocks, eb.blocks, strict=True))


def pp_leq_definition(a: AnyParking, b: AnyParking) -> bool:
    """The order read off the triples: pi_b refines pi_a, rho_b refines rho_a,
    and every block B' of pi_b inside B of pi_a has lambda_b(B') in lambda_a(B).

    Raises:
        PosetError: If the sizes differ
    """
    ta: NC2Triple = convert(a, "triple")
    tb: NC2Triple = convert(b, "triple")
    if ta.n != tb.n:
        raise PosetError(f"Size mismatch: {ta.n} vs {tb.n}")
    if not nc_leq(ta.pi, tb.pi) or not tb.rho.refines(ta.rho):
        return False
    for block, image in zip(tb.pi.blocks, tb.lam, strict=True):
        outer = ta.pi.block_of(block[0])
        if not set(image) <= set(ta.lam_of(outer)):
            return False
    return True


def pp_upper_covers(a: AnyParking) -> list[Any]:
    """Elements covering a, in a's representation.

    Generated by tree surgery, then certified: each must lie above a with
    rank one more.

    Raises:
        PosetError: If surgery yields something that is not a cover
    """
    tree = convert(a, "tree")
    target = representation_of(a)
    rank = pp_rank(a)
    covers = []
    for candidate in upper_cover_trees(tree):
        if pp_rank(candidate) != rank + 1 or not pp_leq(tree, candidate):
            logger.error("Surgery on %s produced a non-cover %s", tree, candidate)
            raise PosetError(f"Surgery produced a non-cover {candidate} of {a}")
        covers.append(convert(candidate, target))
    return covers


def descend(a: AnyParking, pi_lower: SetPartition) -> NC2Pair:
    """The unique element below a whose partition is pi_lower.

    lambda'(B') is the union of lambda(B) over the blocks B of pi inside B'.

    Raises:
        PosetError: If pi_lower <= pi fails
    """
    pair = to_pair(a)
    if not nc_leq(pi_lower, pair.pi):
        raise PosetError(f"{pi_lower} is not below {pair.pi} in NC_{pair.n}")
    word = [0] * pair.n
    for outer in pi_lower.blocks:
        image = sorted(x for b in pair.pi.blocks if b[0] in outer for x in pair.image(b))
        for position, value in zip(outer, image, strict=True):
            word[position - 1] = value
    pi = NoncrossingPartition.coerce(pi_lower)
    return NC2Pair(pi=pi, sigma=Permutation(word=tuple(word)))


def lower_set(a: AnyParking) -> list[NC2Pair]:
    """Every element below a, one per pi' <= pi."""
    pair = to_pair(a)
    return [descend(pair, p) for p in enumerate_noncrossing(pair.n) if nc_leq(p, pair.pi)]


def pp_join(a: AnyParking | HatTop, b: AnyParking | HatTop) -> HatElement:
    """Join in the poset with TOP adjoined.

    Intersect eta sequences. An empty intersection, or a block occurring more
    often than its size, sends the join to TOP.
    """
    if isinstance(a, HatTop) or isinstance(b, HatTop):
        return TOP
    ea, eb = eta(a), eta(b)
    if ea.n != eb.n:
        raise PosetError(f"Size mismatch: {ea.n} vs {eb.n}")
    meets = [tuple(sorted(set(x) & set(y))) for x, y in zip(ea.blocks, eb.blocks, strict=True)]
    if any(not m for m in meets):
        return TOP
    images: dict[Block, list[int]] = {}
    for k, block in enumerate(meets, start=1):
        images.setdefault(block, []).append(k)
    if any(len(ks) > len(block) for block, ks in images.items()):
        return TOP
    try:
        pi = NoncrossingPartition.from_blocks(ea.n, images)
        lam = tuple(tuple(images[b]) for b in pi.blocks)
        triple = NC2Triple(pi=pi, rho=SetPartition.from_blocks(ea.n, lam), lam=lam)
    except ValidationError as e:
        logger.error("eta intersections %s do not define an element", meets)
        raise PosetError(f"Join of {a} and {b} is malformed") from e
    result: NC2Pair = convert(triple, "pair")
    return result


def pp_meet(a: AnyParking | HatTop, b: AnyParking | HatTop) -> HatElement:
    """Meet as the join of all common lower bounds."""
    if isinstance(a, HatTop):
        return b if isinstance(b, HatTop) else to_pair(b)
    if isinstance(b, HatTop):
        return to_pair(a)
    below_b = set(lower_set(b))
    common = [x for x in lower_set(a) if x in below_b]
    return reduce(pp_join, common[1:], common[0])


def eta_masks(elements: list[NC2Pair]) -> NDArray[np.int64]:
    """Bitmask of eta(k) for every element and every k."""
    return np.array(
        [[_mask(block) for block in eta(p).blocks] for p in elements], dtype=np.int64
    )


@cache
def build_pp_poset(n: int) -> FinitePoset:
    """The parking poset on n points, elements as pairs.

    Args:
        n: Ground-set size, 1 <= n <= MAX_PP_POSET_N

    Returns:
        FinitePoset of the (n+1)^(n-1) pairs, ranked by |pi| - 1

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_PP_POSET_N)
    elements = enumerate_parking(n)
    masks = eta_masks(elements)
    leq = ((masks[None, :, :] & ~masks[:, None, :]) == 0).all(axis=2)
    poset = FinitePoset(elements, leq, [p.rank for p in elements], name=f"PP_{n}")
    logger.info("Built parking poset n=%d: %d elements, ranks %s", n, len(poset), poset.rank_sizes())
    return poset


@cache
def nc_poset(n: int) -> FinitePoset:
    """NC_n ordered by reverse refinement, ranked by |pi| - 1."""
    check_guard("n", n, MAX_NC_POSET_N)
    parts = enumerate_noncrossing(n)
    labels = np.array([p.labels() for p in parts])
    # q refines p iff equal labels in q force equal labels in p
    same = labels[:, :, None] == labels[:, None, :]
    leq = (~same[None, :, :, :] | same[:, None, :, :]).all(axis=(2, 3))
    return FinitePoset(parts, leq, [p.num_blocks - 1 for p in parts], name=f"NC_{n}")


def upper_set_size(a: AnyParking) -> int:
    """Number of elements above a, counted in the built poset."""
    pair = to_pair(a)
    poset = build_pp_poset(pair.n)
    return int(poset.leq[poset.index_of(pair)].sum())


def lower_set_size(a: AnyParking) -> int:
    """Number of elements below a, counted in the built poset."""
    pair = to_pair(a)
    poset = build_pp_poset(pair.n)
    return int(poset.leq[:, poset.index_of(pair)].sum())


def action_preserves_order(n: int) -> bool:
    """True if s.x <= s.y iff x <= y for every permutation s and pair x, y."""
    poset = build_pp_poset(n)
    for s in all_permutations(n):
        image = [poset.index_of(act(s, cast(NC2Pair, p))) for p in poset.elements]
        permuted = poset.leq[np.ix_(image, image)]
        if not (permuted == poset.leq).all():
            return False
    return True
