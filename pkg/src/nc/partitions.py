"""Set partitions, noncrossing partitions and Kreweras complements.

Conventions: the ground set is {1..n}; blocks are sorted tuples and the block
list is sorted by minima. The order on NC_n puts the one-block partition 0_n
at the bottom and the all-singletons partition 1_n at the top, so p <= q
means that q refines p.
"""

import logging
import sys
from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from typing import Any

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy.utilities.iterables import multiset_partitions

from src.config import LOGGER_NAME, MAX_NC_N, check_guard
from src.nc.numbers import catalan
from src.nc.permutations import Permutation, transposition_of

logger = logging.getLogger(LOGGER_NAME)

Block = tuple[int, ...]


class PartitionError(Exception):
    """Raised when a partition precondition is violated."""

    pass


class NonRealizablePermutationError(PartitionError):
    """Raised when a permutation is not the embedding of a noncrossing partition."""

    pass


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[Block, ...]:
    """Sort each block and order blocks by their minima."""
    sorted_blocks = [tuple(sorted(b)) for b in blocks]
    return tuple(sorted(sorted_blocks, key=lambda b: b[0]))


def blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if some i<j<k<l has i, k in one block and j, l in the other."""
    labels = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    # Crossing iff the merged sequence alternates a..b..a..b somewhere.
    pattern: list[int] = []
    for _, side in labels:
        if not pattern or pattern[-1] != side:
            pattern.append(side)
    return len(pattern) >= 4


def is_noncrossing_blocks(blocks: Sequence[Sequence[int]]) -> bool:
    """Check the noncrossing predicate on a list of blocks."""
    return not any(blocks_cross(a, b) for a, b in combinations(blocks, 2))


class SetPartition(BaseModel):
    """A set partition of {1..n} in canonical form."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Ground-set size")
    blocks: tuple[Block, ...] = Field(..., description="Sorted blocks ordered by minima")

    @field_validator("blocks")
    @classmethod
    def validate_blocks_nonempty(cls, v: tuple[Block, ...]) -> tuple[Block, ...]:
        """Reject empty blocks."""
        if any(len(b) == 0 for b in v):
            raise ValueError("Blocks must be nonempty.")
        return v

    @model_validator(mode="after")
    def validate_canonical_cover(self) -> "SetPartition":
        """Ensure the blocks are canonical and cover {1..n} exactly once."""
        elements = sorted(x for b in self.blocks for x in b)
        if elements != list(range(1, self.n + 1)):
            raise ValueError(f"Blocks {self.blocks} do not partition 1..{self.n}")
        if canonical_blocks(self.blocks) != self.blocks:
            raise ValueError(f"Blocks {self.blocks} are not in canonical order")
        return self

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> Self:
        """Build a partition from blocks given in any order."""
        return cls(n=n, blocks=canonical_blocks(blocks))

    @property
    def num_blocks(self) -> int:
        """Number of blocks |p|."""
        return len(self.blocks)

    def block_of(self, i: int) -> Block:
        """Return the block containing i."""
        for b in self.blocks:
            if i in b:
                return b
        raise PartitionError(f"{i} is not in 1..{self.n}")

    def labels(self) -> tuple[int, ...]:
        """Block index (0-based, canonical order) of each point 1..n."""
        lab = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for x in b:
                lab[x - 1] = idx
        return tuple(lab)

    def refines(self, other: "SetPartition") -> bool:
        """True if every block of self lies inside a block of other."""
        if other.n != self.n:
            raise PartitionError(f"Size mismatch: {self.n} vs {other.n}")
        lab = other.labels()
        return all(len({lab[x - 1] for x in b}) == 1 for b in self.blocks)

    def is_noncrossing(self) -> bool:
        """Check the noncrossing predicate."""
        return is_noncrossing_blocks(self.blocks)

    def is_interval_partition(self) -> bool:
        """True if every block is a run of consecutive integers."""
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)

    def relabel(self, s: Permutation) -> "SetPartition":
        """Return s . p, the partition with blocks s(B)."""
        return SetPartition.from_blocks(self.n, (s.image(b) for b in self.blocks))

    def to_json(self) -> dict[str, Any]:
        """JSON form {"n": int, "blocks": [[int, ...], ...]}."""
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def __str__(self) -> str:
        return "|".join("".join(str(x) for x in b) for b in self.blocks)


class NoncrossingPartition(SetPartition):
    """A set partition with no crossing pair of blocks."""

    @model_validator(mode="after")
    def validate_noncrossing(self) -> "NoncrossingPartition":
        """Reject i<j<k<l with i, k in one block and j, l in another."""
        if not self.is_noncrossing():
            raise ValueError(f"Partition {self.blocks} is crossing")
        return self

    @classmethod
    def zero(cls, n: int) -> "NoncrossingPartition":
        """The one-block partition 0_n (minimum)."""
        return cls(n=n, blocks=(tuple(range(1, n + 1)),) if n else ())

    @classmethod
    def one(cls, n: int) -> "NoncrossingPartition":
        """The all-singletons partition 1_n (maximum)."""
        return cls(n=n, blocks=tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def coerce(cls, p: SetPartition) -> "NoncrossingPartition":
        """View a set partition as noncrossing, validating the predicate."""
        if isinstance(p, NoncrossingPartition):
            return p
        return cls(n=p.n, blocks=p.blocks)


class WeakComposition(BaseModel):
    """A sequence of nonnegative integers summing to n."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...]
    n: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_sum(self) -> "WeakComposition":
        """Ensure parts are nonnegative and sum to n."""
        if any(a < 0 for a in self.parts):
            raise ValueError(f"Parts must be nonnegative: {self.parts}")
        if sum(self.parts) != self.n:
            raise ValueError(f"Parts {self.parts} do not sum to {self.n}")
        return self

    def satisfies_partial_sums(self) -> bool:
        """True if a_1 + ... + a_j >= j for every j."""
        total = 0
        for j, a in enumerate(self.parts, start=1):
            total += a
            if total < j:
                return False
        return True


def enumerate_set_partitions(n: int) -> list[SetPartition]:
    """Return all set partitions of {1..n}, canonical, sorted by blocks."""
    if n == 0:
        return [SetPartition(n=0, blocks=())]
    result = [
        SetPartition.from_blocks(n, blocks)
        for blocks in multiset_partitions(list(range(1, n + 1)))
    ]
    return sorted(result, key=lambda p: p.blocks)


def _noncrossing_on(elements: tuple[int, ...]) -> Iterator[list[Block]]:
    """Yield noncrossing partitions of an increasing run of elements."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for size in range(len(rest) + 1):
        for others in combinations(range(len(rest)), size):
            block = (first, *(rest[i] for i in others))
            # Gaps between consecutive members and the tail are independent.
            cuts = [-1, *others, len(rest)]
            gaps = [rest[a + 1 : b] for a, b in zip(cuts, cuts[1:], strict=False)]
            yield from _combine_gaps(block, gaps)


def _combine_gaps(block: Block, gaps: list[tuple[int, ...]]) -> Iterator[list[Block]]:
    if not gaps:
        yield [block]
        return
    for head in _noncrossing_on(gaps[0]):
        for tail in _combine_gaps(block, gaps[1:]):
            yield head + tail


def enumerate_noncrossing(n: int) -> list[NoncrossingPartition]:
    """Return all noncrossing partitions of {1..n}.

    Args:
        n: Ground-set size, 1 <= n <= MAX_NC_N

    Returns:
        The C_n elements of NC_n, canonical and sorted by blocks

    Raises:
        GuardExceededError: If n > MAX_NC_N
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_guard("n", n, MAX_NC_N)
    result = [
        NoncrossingPartition.from_blocks(n, blocks)
        for blocks in _noncrossing_on(tuple(range(1, n + 1)))
    ]
    result.sort(key=lambda p: p.blocks)
    logger.debug("NC_%d: %d partitions (C_n = %d)", n, len(result), catalan(n))
    return result


def nc_leq(p: SetPartition, q: SetPartition) -> bool:
    """Return p <= q in NC_n, i.e. q refines p.

    Raises:
        PartitionError: If the ground sets differ
    """
    if p.n != q.n:
        raise PartitionError(f"Size mismatch: {p.n} vs {q.n}")
    return q.refines(p)


def embed_permutation(p: SetPartition) -> Permutation:
    """Return the permutation with one increasing cycle per block."""
    return Permutation.from_cycles(p.n, p.blocks)


def partition_of_permutation(s: Permutation) -> NoncrossingPartition:
    """Recover the noncrossing partition whose embedding is s.

    Raises:
        NonRealizablePermutationError: If some cycle is not increasing from its
            minimum, or the cycles cross
    """
    cycles = s.cycles()
    for cycle in cycles:
        if list(cycle) != sorted(cycle):
            logger.error("Permutation %s has a non-increasing cycle %s", s, cycle)
            raise NonRealizablePermutationError(
                f"Cycle {cycle} of {s} is not increasing"
            )
    if not is_noncrossing_blocks(cycles):
        logger.error("Permutation %s has crossing cycles", s)
        raise NonRealizablePermutationError(f"Cycles of {s} are crossing")
    return NoncrossingPartition.from_blocks(s.n, cycles)


def kreweras(p: SetPartition) -> NoncrossingPartition:
    """Kreweras complement K(p), embedded as 0_n-bar . p-bar^-1."""
    full = embed_permutation(NoncrossingPartition.zero(p.n))
    return partition_of_permutation(full * embed_permutation(p).inverse())


def relative_kreweras(p: SetPartition, t: SetPartition) -> NoncrossingPartition:
    """Relative Kreweras complement K(p, t), embedded as p-bar . t-bar^-1.

    Args:
        p: Lower partition (coarser)
        t: Upper partition, t refines p

    Returns:
        The noncrossing partition nu with nu-bar = p-bar . t-bar^-1

    Raises:
        PartitionError: If p <= t fails
    """
    if not nc_leq(p, t):
        raise PartitionError(f"relative_kreweras needs {p} <= {t}")
    return partition_of_permutation(
        embed_permutation(p) * embed_permutation(t).inverse()
    )


def el_label(x: SetPartition, y: SetPartition) -> tuple[int, int]:
    """Edge label of a cover x < y in NC_n, as a pair (i, j).

    The label is x-bar^-1 y-bar with the product read left to right, i.e. the
    transposition y-bar o x-bar^-1. Lexicographically ordered, it is an
    EL-labeling with distinct labels on the upper covers of each element.

    Raises:
        PartitionError: If x < y is not a cover
    """
    label = transposition_of(embed_permutation(y) * embed_permutation(x).inverse())
    if label is None or not nc_leq(x, y):
        raise PartitionError(f"{x} < {y} is not a cover of NC_{x.n}")
    return label


def lukasiewicz_encode(p: SetPartition) -> WeakComposition:
    """Encode p by a_i = |B| if i = min B, else 0."""
    parts = [0] * p.n
    for b in p.blocks:
        parts[b[0] - 1] = len(b)
    return WeakComposition(parts=tuple(parts), n=p.n)


def lukasiewicz_decode(c: WeakComposition) -> NoncrossingPartition:
    """Rebuild the noncrossing partition of a Lukasiewicz word.

    A positive part opens a new block; a zero joins the innermost block that
    still has room (the facing-step matching of the path).

    Raises:
        PartitionError: If a partial sum a_1 + ... + a_j falls below j, or the
            length differs from n
    """
    if len(c.parts) != c.n or not c.satisfies_partial_sums():
        raise PartitionError(f"{c.parts} violates the partial-sum condition")
    blocks: list[list[int]] = []
    open_blocks: list[tuple[list[int], int]] = []
    for i, a in enumerate(c.parts, start=1):
        if a > 0:
            block = [i]
            blocks.append(block)
            if a > 1:
                open_blocks.append((block, a - 1))
            continue
        block, room = open_blocks.pop()
        block.append(i)
        if room > 1:
            open_blocks.append((block, room - 1))
    return NoncrossingPartition.from_blocks(c.n, blocks)


def nc_mobius(p: SetPartition, q: SetPartition) -> int:
    """Closed-form Mobius value mu(p, q) on NC_n.

    Equals (-1)^(|q| - |p|) times the product of C_{|b|-1} over the blocks
    b of K(p, q).
    """
    nu = relative_kreweras(p, q)
    value = 1
    for b in nu.blocks:
        value *= catalan(len(b) - 1)
    return (-1) ** (q.num_blocks - p.num_blocks) * value
