"""Equivariant bijections between triples, pairs, parking words and trees.

The pair (pi, sigma) is the hub: every conversion that has no direct map
goes through it. All maps commute with the symmetric-group action.
"""

import logging
from collections.abc import Callable, Iterator
from fractions import Fraction
from itertools import count
from math import factorial
from typing import Any, TypeVar, cast

from pydantic import ValidationError
from sympy.utilities.iterables import multiset_permutations

from src.config import LOGGER_NAME, REPRESENTATIONS
from src.nc.partitions import (
    NoncrossingPartition,
    PartitionError,
    SetPartition,
    WeakComposition,
    lukasiewicz_decode,
)
from src.nc.permutations import Permutation, all_permutations
from src.parking.generation import enumerate_parking_words, fixed_words
from src.parking.objects import (
    EtaSequence,
    KParkingTree,
    KParkingWord,
    NC2Pair,
    NC2Triple,
    ParkingTree,
    ParkingWord,
    TreeNode,
)

logger = logging.getLogger(LOGGER_NAME)

AnyParking = NC2Pair | NC2Triple | KParkingWord | KParkingTree
T = TypeVar("T", NC2Pair, NC2Triple, KParkingWord, KParkingTree)


class ConversionError(Exception):
    """Raised when a parking object cannot be converted or acted on."""

    pass


def make_word(word: tuple[int, ...], k: int) -> KParkingWord:
    """Build a word, as a ParkingWord when k = 1."""
    if k == 1:
        return ParkingWord(word=word)
    return KParkingWord(word=word, k=k)


def make_tree(root: TreeNode, n: int, k: int) -> KParkingTree:
    """Build a tree, as a ParkingTree when k = 1."""
    if k == 1:
        return ParkingTree(root=root, n=n)
    return KParkingTree(root=root, n=n, k=k)


def representation_of(x: Any) -> str:
    """Name the representation of x: "triple", "pair", "word" or "tree".

    Raises:
        ConversionError: If x is not a parking object
    """
    if isinstance(x, NC2Triple):
        return "triple"
    if isinstance(x, NC2Pair):
        return "pair"
    if isinstance(x, KParkingWord):
        return "word"
    if isinstance(x, KParkingTree):
        return "tree"
    raise ConversionError(f"Not a parking object: {type(x).__name__}")


# Direct maps


def pair_to_triple(p: NC2Pair) -> NC2Triple:
    """(pi, sigma) -> (pi, sigma . pi, B -> sigma(B))."""
    images = tuple(p.image(b) for b in p.pi.blocks)
    return NC2Triple(pi=p.pi, rho=SetPartition.from_blocks(p.n, images), lam=images)


def triple_to_pair(t: NC2Triple) -> NC2Pair:
    """The minimal coset representative: sigma maps each block increasingly onto its image."""
    word = [0] * t.n
    for block, image in zip(t.pi.blocks, t.lam, strict=True):
        for a, b in zip(block, image, strict=True):
            word[a - 1] = b
    return NC2Pair(pi=t.pi, sigma=Permutation(word=tuple(word)))


def triple_to_word(t: NC2Triple) -> ParkingWord:
    """w_i = min B for every i in lambda(B)."""
    word = [0] * t.n
    for block, image in zip(t.pi.blocks, t.lam, strict=True):
        for i in image:
            word[i - 1] = block[0]
    return ParkingWord(word=tuple(word))


def word_to_triple(w: KParkingWord) -> NC2Triple:
    """Decode the letter multiplicities into pi, then lambda(B) = A_{min B}.

    Raises:
        ConversionError: If w is a k-parking word with k > 1
    """
    if w.k != 1:
        raise ConversionError(f"Only 1-parking words convert to triples, got k={w.k}")
    parts = w.composition()
    sizes = WeakComposition(parts=tuple(len(a) for a in parts), n=w.n)
    try:
        pi = lukasiewicz_decode(sizes)
    except PartitionError as e:
        raise ConversionError(f"Word {w} does not decode") from e
    lam = tuple(parts[b[0] - 1] for b in pi.blocks)
    return NC2Triple(pi=pi, rho=SetPartition.from_blocks(w.n, lam), lam=lam)


def pair_to_tree(p: NC2Pair) -> ParkingTree:
    """Arch decomposition: the block of the smallest point labels the root.

    The gap between consecutive block elements, and the tail after the last
    one, become the children in order.
    """

    def build(lo: int, hi: int) -> TreeNode:
        if lo > hi:
            return TreeNode.leaf()
        block = p.pi.block_of(lo)
        bounds = [*block, hi + 1]
        children = tuple(build(a + 1, b - 1) for a, b in zip(bounds, bounds[1:], strict=False))
        return TreeNode(label=p.image(block), children=children)

    return ParkingTree(root=build(1, p.n), n=p.n)


def tree_to_pair(t: KParkingTree) -> NC2Pair:
    """Read positions e1, c1, e2, c2, ...: each element, then its child's subtree.

    Raises:
        ConversionError: If t is a k-tree with k > 1
    """
    if t.k != 1:
        raise ConversionError(f"Only 1-parking trees convert to pairs, got k={t.k}")
    positions = count(1)
    blocks: list[list[int]] = []
    word = [0] * t.n

    def read(node: TreeNode) -> None:
        if node.is_leaf:
            return
        block: list[int] = []
        blocks.append(block)
        for value, child in zip(node.label, node.children, strict=True):
            position = next(positions)
            block.append(position)
            word[position - 1] = value
            read(child)

    read(t.root)
    pi = NoncrossingPartition.from_blocks(t.n, blocks)
    return NC2Pair(pi=pi, sigma=Permutation(word=tuple(word)))


def word_to_tree(w: KParkingWord) -> KParkingTree:
    """Prefix construction from the composition padded to kn + 1 parts.

    Raises:
        ConversionError: If the composition does not fill the frame exactly
    """
    frame: Iterator[tuple[int, ...]] = iter((*w.composition(), ()))

    def build() -> TreeNode:
        label = next(frame, None)
        if label is None:
            raise ConversionError(f"Word {w} overruns the frame of {w.k * w.n + 1} vertices")
        return TreeNode(label=label, children=tuple([build() for _ in range(w.k * len(label))]))

    root = build()
    leftover = list(frame)
    if leftover:
        raise ConversionError(f"Word {w} leaves {len(leftover)} vertices unplaced")
    return make_tree(root, w.n, w.k)


def tree_to_word(t: KParkingTree) -> KParkingWord:
    """w_j = i when j lies in the label of the i-th vertex in prefix order."""
    word = [0] * t.n
    for i, vertex in enumerate(t.root.prefix(), start=1):
        for j in vertex.label:
            word[j - 1] = i
    return make_word(tuple(word), t.k)


def to_pair(x: AnyParking) -> NC2Pair:
    """Convert any 1-parking object to its pair form."""
    if isinstance(x, NC2Triple):
        return triple_to_pair(x)
    if isinstance(x, NC2Pair):
        return x
    if isinstance(x, KParkingWord):
        return triple_to_pair(word_to_triple(x))
    if isinstance(x, KParkingTree):
        return tree_to_pair(x)
    raise ConversionError(f"Not a parking object: {type(x).__name__}")


_DIRECT: dict[tuple[str, str], Callable[[Any], Any]] = {
    ("pair", "triple"): pair_to_triple,
    ("triple", "pair"): triple_to_pair,
    ("triple", "word"): triple_to_word,
    ("word", "triple"): word_to_triple,
    ("pair", "tree"): pair_to_tree,
    ("tree", "pair"): tree_to_pair,
    ("word", "tree"): word_to_tree,
    ("tree", "word"): tree_to_word,
}

_FROM_PAIR: dict[str, Callable[[NC2Pair], Any]] = {
    "pair": lambda p: p,
    "triple": pair_to_triple,
    "word": lambda p: triple_to_word(pair_to_triple(p)),
    "tree": pair_to_tree,
}


def convert(x: AnyParking, target: str) -> Any:
    """Convert a parking object to another representation.

    Args:
        x: A triple, pair, parking word or parking tree
        target: One of "triple", "pair", "word", "tree"

    Returns:
        The same element in the target representation

    Raises:
        ConversionError: If the target is unknown or the conversion fails
    """
    if target not in REPRESENTATIONS:
        raise ConversionError(
            f"Unknown representation: {target}. Valid options: {', '.join(REPRESENTATIONS)}"
        )
    source = representation_of(x)
    if source == target:
        return x
    direct = _DIRECT.get((source, target))
    try:
        if direct is not None:
            return direct(x)
        return _FROM_PAIR[target](to_pair(x))
    except ValidationError as e:
        logger.error("Conversion %s -> %s produced an invalid object for %s", source, target, x)
        raise ConversionError(f"Conversion {source} -> {target} failed for {x}") from e


def act(s: Permutation, x: T) -> T:
    """Apply s to a parking object.

    Words: (s . w)_i = w_{s^-1(i)}. Trees: relabel every vertex.
    Triples: (pi, s . rho, s o lambda). Pairs: re-sort s o sigma within blocks.

    Raises:
        ConversionError: If the sizes differ
    """
    size = x.n
    if s.n != size:
        raise ConversionError(f"Size mismatch: permutation on {s.n}, object on {size}")
    result: AnyParking
    if isinstance(x, NC2Triple):
        lam = tuple(s.image(b) for b in x.lam)
        result = NC2Triple(pi=x.pi, rho=x.rho.relabel(s), lam=lam)
    elif isinstance(x, NC2Pair):
        word = [0] * size
        for block in x.pi.blocks:
            for a, b in zip(block, s.image(x.image(block)), strict=True):
                word[a - 1] = b
        result = NC2Pair(pi=x.pi, sigma=Permutation(word=tuple(word)))
    elif isinstance(x, KParkingWord):
        inv = s.inverse()
        result = make_word(tuple(x.word[inv(i) - 1] for i in range(1, size + 1)), x.k)
    else:
        result = make_tree(x.root.relabel(s), x.n, x.k)
    return cast(T, result)


def eta(x: AnyParking) -> EtaSequence:
    """eta(k) = the block B of pi with k in lambda(B)."""
    p = to_pair(x)
    blocks: list[tuple[int, ...]] = [()] * p.n
    for block in p.pi.blocks:
        for k in p.image(block):
            blocks[k - 1] = block
    return EtaSequence(n=p.n, blocks=tuple(blocks))


def word_prime_criterion(word: tuple[int, ...], k: int = 1) -> bool:
    """Sorted word u satisfies u_j <= floor((j-1)(kn-1)/n) + 1 for every j.

    For k = 1 this is #{i : w_i <= j} > j for j = 1..n-1. For larger k these
    are the rational parking words of slope (n, kn-1), (kn - 1)^(n - 1) of them.
    The bound #{i : w_i <= k(j-1)+1} > j is stricter: 7 words at n = 3, k = 2.
    """
    n = len(word)
    return all(
        a <= (j - 1) * (k * n - 1) // n + 1 for j, a in enumerate(sorted(word), start=1)
    )


def prime_criteria(x: AnyParking) -> tuple[bool, bool, bool]:
    """Return the (block, word, tree) primeness criteria of x."""
    pair = to_pair(x)
    block = pair.pi.block_of(1) == pair.pi.block_of(pair.n)
    word = word_prime_criterion(triple_to_word(pair_to_triple(pair)).word)
    tree = pair_to_tree(pair).root.children[-1].is_leaf
    return block, word, tree


def is_prime(x: AnyParking) -> bool:
    """True if 1 and n share a block of pi, cross-checked on words and trees.

    Raises:
        ConversionError: If the three criteria disagree
    """
    block, word, tree = prime_criteria(x)
    if not block == word == tree:
        logger.error("Prime criteria disagree on %s: block=%s word=%s tree=%s", x, block, word, tree)
        raise ConversionError(f"Prime criteria disagree on {x}")
    return block


def orbit_representative_check(w: KParkingWord) -> bool:
    """True if w has w_i <= i and is lex-maximal among such rearrangements.

    These are exactly the words of the elements (pi, pi, id).
    """
    if any(a > i for i, a in enumerate(w.word, start=1)):
        return False
    best = max(
        tuple(v)
        for v in multiset_permutations(list(w.word))
        if all(a <= i for i, a in enumerate(v, start=1))
    )
    return best == w.word


def fixed_point_count(s: Permutation, k: int = 1) -> int:
    """Number of k-parking words fixed by s."""
    return len(fixed_words(s, k))


def orbit_count(n: int) -> int:
    """Number of S_n-orbits on the parking poset, by Burnside's lemma.

    Fixed points are counted by applying the action to every parking word.
    """
    words = enumerate_parking_words(n)
    total = sum(
        sum(1 for w in words if act(s, w) == w) for s in all_permutations(n)
    )
    orbits = Fraction(total, factorial(n))
    if orbits.denominator != 1:
        logger.error("Burnside average %s is not integral for n=%d", orbits, n)
        raise ConversionError(f"Burnside average {orbits} is not integral")
    return int(orbits)
