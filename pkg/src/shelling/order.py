"""The cover order used to shell the parking poset with a top adjoined.

Upper covers tau of phi are ordered by the code of tau's permutation, then by
the edge label of the underlying cover of noncrossing partitions. Maximal
chains are compared at their first fork.
"""

import logging
from collections.abc import Sequence
from functools import cached_property
from typing import cast

from pydantic import BaseModel, ConfigDict, Field

from src.config import LOGGER_NAME
from src.nc.partitions import Block, el_label
from src.nc.permutations import permutation_code
from src.parking.conversions import AnyParking, eta, to_pair
from src.parking.objects import NC2Pair
from src.poset.finite import TOP, FinitePoset, HatTop, maximal_chains
from src.poset.parking_poset import HatElement, build_pp_poset, pp_leq, pp_upper_covers

logger = logging.getLogger(LOGGER_NAME)


class ShellingOrderError(Exception):
    """Raised when the cover order is not a strict total order or a cover is expected."""

    pass


class CoverLabel(BaseModel):
    """Sort key of an upper cover: code of the upper element, then edge label."""

    model_config = ConfigDict(frozen=True)

    code: tuple[int, ...]
    el: tuple[int, int] = Field(..., description="Transposition (i, j), i < j")

    def key(self) -> tuple[tuple[int, ...], tuple[int, int]]:
        """Lexicographic comparison key."""
        return self.code, self.el


class CoverStats(BaseModel):
    """Statistics of a cover phi < psi."""

    model_config = ConfigDict(frozen=True)

    split_block: Block = Field(..., description="Block of phi split to reach psi")
    m: int = Field(..., ge=0, description="Largest i with c_i(sigma) < c_i(sigma')")
    p0: int = Field(..., ge=0, description="Zero prefix length of the code of phi")


def code(x: AnyParking) -> tuple[int, ...]:
    """gamma = c_n ... c_1 of the element's permutation."""
    return permutation_code(to_pair(x).sigma)


def p0(x: AnyParking) -> int:
    """Length of the longest all-zero prefix of the code."""
    gamma = code(x)
    return next((i for i, c in enumerate(gamma) if c), len(gamma))


def p0_from_eta(x: AnyParking) -> int:
    """Largest k with i in eta(i) for every i in n-k+1..n."""
    seq = eta(x)
    k = 0
    while k < seq.n and (seq.n - k) in seq[seq.n - k]:
        k += 1
    return k


def _is_cover(phi: NC2Pair, psi: NC2Pair) -> bool:
    return psi.rank == phi.rank + 1 and pp_leq(phi, psi)


def split_block(phi: AnyParking, psi: AnyParking) -> Block:
    """N(phi, psi): the block of phi that psi splits.

    Raises:
        ShellingOrderError: If phi < psi is not a cover
    """
    a, b = to_pair(phi), to_pair(psi)
    if not _is_cover(a, b):
        raise ShellingOrderError(f"{a} < {b} is not a cover")
    return next(block for block in a.pi.blocks if block not in b.pi.blocks)


def m_value(phi: AnyParking, psi: AnyParking) -> int:
    """m(phi, psi): the largest i with c_i(sigma) < c_i(sigma'), or 0 if sigma = sigma'."""
    a, b = to_pair(phi), to_pair(psi)
    if a.sigma == b.sigma:
        return 0
    ca, cb = code(a), code(b)
    n = a.n
    # gamma lists c_n first, so c_i sits at position n - i
    return max((i for i in range(1, n + 1) if ca[n - i] < cb[n - i]), default=0)


def cover_stats(phi: AnyParking, psi: AnyParking) -> CoverStats:
    """N, m and p0 of a cover.

    Raises:
        ShellingOrderError: If phi < psi is not a cover
    """
    return CoverStats(split_block=split_block(phi, psi), m=m_value(phi, psi), p0=p0(phi))


def cover_label(phi: AnyParking, psi: AnyParking) -> CoverLabel:
    """Label of the cover phi < psi."""
    a, b = to_pair(phi), to_pair(psi)
    return CoverLabel(code=code(b), el=el_label(a.pi, b.pi))


def _sorted_by_label(phi: NC2Pair, covers: Sequence[NC2Pair]) -> list[NC2Pair]:
    labelled = sorted(((cover_label(phi, c).key(), c) for c in covers), key=lambda t: t[0])
    for (k1, c1), (k2, c2) in zip(labelled, labelled[1:], strict=False):
        if k1 == k2:
            logger.error("Covers %s and %s of %s share the label %s", c1, c2, phi, k1)
            raise ShellingOrderError(f"Cover order of {phi} is not total: {c1} ~ {c2}")
    return [c for _, c in labelled]


def cover_order(phi: AnyParking) -> list[HatElement]:
    """Upper covers of phi in the poset with TOP adjoined, sorted.

    Raises:
        ShellingOrderError: If two distinct covers share a label
    """
    pair = to_pair(phi)
    if pair.rank == pair.n - 1:
        return [TOP]
    return list(_sorted_by_label(pair, pp_upper_covers(pair)))


def precedes(phi: AnyParking, a: HatElement, b: HatElement) -> bool:
    """a strictly precedes b in the cover order at phi."""
    order = cover_order(phi)
    return order.index(a) < order.index(b)


def lex_compare(c1: Sequence[HatElement], c2: Sequence[HatElement]) -> int:
    """Compare maximal chains at their first fork: -1, 0 or 1.

    Raises:
        ShellingOrderError: If the chains start at different elements
    """
    if c1[0] != c2[0]:
        raise ShellingOrderError("Maximal chains must share the bottom element")
    for j in range(1, min(len(c1), len(c2))):
        if c1[j] != c2[j]:
            order = cover_order(cast(NC2Pair, c1[j - 1]))
            return -1 if order.index(c1[j]) < order.index(c2[j]) else 1
    return 0


class ChainOrder:
    """Index-level cover orders and chain keys on a built parking poset with TOP."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.poset: FinitePoset = build_pp_poset(n).with_top()
        self.top = len(self.poset) - 1
        self._orders: dict[int, list[int]] = {}
        self._positions: dict[int, dict[int, int]] = {}

    def element(self, i: int) -> NC2Pair:
        """The pair at index i (not TOP)."""
        return cast(NC2Pair, self.poset.elements[i])

    def order(self, i: int) -> list[int]:
        """Upper covers of i sorted by the cover order."""
        if i not in self._orders:
            covers = self.poset.upper_covers(i)
            if covers == [self.top]:
                self._orders[i] = covers
            else:
                phi = self.element(i)
                ordered = _sorted_by_label(phi, [self.element(j) for j in covers])
                self._orders[i] = [self.poset.index_of(c) for c in ordered]
            self._positions[i] = {j: pos for pos, j in enumerate(self._orders[i])}
        return self._orders[i]

    def position(self, i: int, j: int) -> int:
        """Rank of cover j in the order at i."""
        self.order(i)
        return self._positions[i][j]

    def precedes(self, i: int, a: int, b: int) -> bool:
        """a comes before b among the covers of i."""
        return self.position(i, a) < self.position(i, b)

    def chain_key(self, chain: Sequence[int]) -> tuple[int, ...]:
        """Positions along the chain; keys sort chains lexicographically."""
        return tuple(self.position(a, b) for a, b in zip(chain, chain[1:], strict=False))

    @cached_property
    def chains(self) -> list[tuple[int, ...]]:
        """Maximal chains of the poset with TOP, in shelling order."""
        return sorted(maximal_chains(self.poset), key=self.chain_key)

    def code_of(self, i: int) -> tuple[int, ...]:
        """Code of a non-TOP element."""
        return code(self.element(i))

    def is_top(self, i: int) -> bool:
        """True for the adjoined maximum."""
        return isinstance(self.poset.elements[i], HatTop)
