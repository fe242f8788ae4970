"""Operations specific to parking trees.

Upper covers by vertex surgery, the nilpotent partial-function view, and the
bridge between right combs and ordered set compositions.
"""

import logging
from collections.abc import Iterator
from itertools import combinations

from src.config import LOGGER_NAME
from src.nc.partitions import Block, NoncrossingPartition
from src.nc.permutations import Permutation
from src.parking.conversions import ConversionError, pair_to_tree
from src.parking.objects import KParkingTree, NC2Pair, ParkingTree, TreeNode

logger = logging.getLogger(LOGGER_NAME)

Path = tuple[int, ...]
Composition = tuple[Block, ...]


def graft_rightmost(forest: tuple[TreeNode, ...], subtree: TreeNode) -> tuple[TreeNode, ...]:
    """Replace the rightmost leaf of a nonempty forest by subtree."""
    last = forest[-1]
    if last.is_leaf:
        return (*forest[:-1], subtree)
    return (
        *forest[:-1],
        TreeNode(label=last.label, children=graft_rightmost(last.children, subtree)),
    )


def _vertices(node: TreeNode, path: Path = ()) -> Iterator[tuple[Path, TreeNode]]:
    if node.is_leaf:
        return
    yield path, node
    for i, child in enumerate(node.children):
        yield from _vertices(child, (*path, i))


def _replace(node: TreeNode, path: Path, new: TreeNode) -> TreeNode:
    if not path:
        return new
    head, rest = path[0], path[1:]
    children = list(node.children)
    children[head] = _replace(children[head], rest, new)
    return TreeNode(label=node.label, children=tuple(children))


def split_vertex(vertex: TreeNode) -> Iterator[TreeNode]:
    """All results of splitting one vertex A into A1 and A2.

    The children are cut into L1 (nonempty), L2 (|A2| subtrees) and L3; A2
    takes L2 as children and replaces the rightmost leaf of L1; A1 keeps
    L1 followed by L3.
    """
    label, children = vertex.label, vertex.children
    for size in range(1, len(label)):
        for part in combinations(label, size):
            a2 = tuple(part)
            a1 = tuple(x for x in label if x not in a2)
            for cut in range(1, len(children) - size + 1):
                l1 = children[:cut]
                l2 = children[cut : cut + size]
                l3 = children[cut + size :]
                grafted = graft_rightmost(l1, TreeNode(label=a2, children=l2))
                yield TreeNode(label=a1, children=(*grafted, *l3))


def upper_cover_trees(tree: KParkingTree) -> list[ParkingTree]:
    """Parking trees covering tree, by vertex surgery, deduplicated.

    Raises:
        ConversionError: If tree is a k-tree with k > 1
    """
    if tree.k != 1:
        raise ConversionError("Surgery applies to 1-parking trees only")
    seen: set[TreeNode] = set()
    covers: list[ParkingTree] = []
    for path, vertex in _vertices(tree.root):
        for replacement in split_vertex(vertex):
            root = _replace(tree.root, path, replacement)
            if root not in seen:
                seen.add(root)
                covers.append(ParkingTree(root=root, n=tree.n))
    logger.debug("Surgery produced %d covers of %s", len(covers), tree)
    return covers


def nilpotent_function(tree: KParkingTree) -> dict[int, int]:
    """The partial map sending each element of a child to the parent element it hangs from.

    The j-th child of a vertex with sorted label (a_1, ..., a_m) hangs from
    a_j. Undefined exactly on the root label.
    """
    if tree.k != 1:
        raise ConversionError("The nilpotent view applies to 1-parking trees only")
    f: dict[int, int] = {}
    for vertex in tree.root.internal_nodes():
        for a, child in zip(vertex.label, vertex.children, strict=True):
            for x in child.label:
                f[x] = a
    return f


def tree_from_nilpotent(n: int, f: dict[int, int]) -> ParkingTree:
    """Rebuild the parking tree of a nilpotent partial map on {1..n}.

    The root is the set where f is undefined; the subtree hanging from i is
    labelled by f^-1(i).

    Raises:
        ConversionError: If f leaves {1..n} or is not nilpotent
    """
    points = range(1, n + 1)
    if any(x not in points or y not in points for x, y in f.items()):
        raise ConversionError(f"Partial map {f} leaves 1..{n}")
    for x in f:
        current, steps = x, 0
        while current in f:
            current = f[current]
            steps += 1
            if steps > n:
                raise ConversionError(f"Partial map {f} is not nilpotent (cycle through {x})")
    preimage: dict[int, list[int]] = {i: [] for i in points}
    for x, y in f.items():
        preimage[y].append(x)

    def build(label: tuple[int, ...]) -> TreeNode:
        if not label:
            return TreeNode.leaf()
        return TreeNode(label=label, children=tuple(build(tuple(preimage[a])) for a in label))

    root_label = tuple(x for x in points if x not in f)
    return ParkingTree(root=build(root_label), n=n)


def is_right_comb(tree: KParkingTree) -> bool:
    """True if every child but the last of every vertex is a leaf."""
    return all(
        all(child.is_leaf for child in vertex.children[:-1])
        for vertex in tree.root.internal_nodes()
    )


def right_comb_to_composition(tree: KParkingTree) -> Composition:
    """Read the labels along the right branch.

    Raises:
        ConversionError: If tree is not a right comb
    """
    if tree.k != 1 or not is_right_comb(tree):
        raise ConversionError(f"{tree} is not a right comb")
    parts: list[Block] = []
    node = tree.root
    while not node.is_leaf:
        parts.append(node.label)
        node = node.children[-1]
    return tuple(parts)


def interval_pair(n: int, composition: Composition) -> NC2Pair:
    """The 2-partition whose i-th interval block maps onto the i-th set."""
    blocks: list[Block] = []
    word = [0] * n
    start = 1
    for part in composition:
        block = tuple(range(start, start + len(part)))
        blocks.append(block)
        for a, b in zip(block, sorted(part), strict=True):
            word[a - 1] = b
        start += len(part)
    pi = NoncrossingPartition.from_blocks(n, blocks)
    return NC2Pair(pi=pi, sigma=Permutation(word=tuple(word)))


def composition_to_right_comb(n: int, composition: Composition) -> ParkingTree:
    """Inverse of right_comb_to_composition, through the interval 2-partition.

    Raises:
        ConversionError: If the parts are not a set composition of {1..n}
    """
    elements = sorted(x for part in composition for x in part)
    if elements != list(range(1, n + 1)) or any(not part for part in composition):
        raise ConversionError(f"{composition} is not a set composition of 1..{n}")
    return pair_to_tree(interval_pair(n, composition))
