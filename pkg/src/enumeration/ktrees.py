"""k-parking trees, their bijection with k-multichains, and their codes.

Children of a vertex are grouped into broods of k consecutive positions; the
child at position i of its brood has index i. Merging children of index
greater than i into their parent and stacking each brood into one subtree
gives the i-th element of the associated multichain.
"""

import heapq
import logging
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import LOGGER_NAME
from src.nc.partitions import Block
from src.parking.conversions import (
    AnyParking,
    convert,
    make_tree,
    to_pair,
    tree_to_pair,
    word_to_tree,
)
from src.parking.generation import enumerate_parking_words
from src.parking.objects import KParkingTree, NC2Pair, TreeNode
from src.parking.trees import graft_rightmost
from src.poset.parking_poset import pp_leq

logger = logging.getLogger(LOGGER_NAME)


class KTreeError(Exception):
    """Raised when a k-tree, its code, or a multichain is inconsistent."""

    pass


def enumerate_ktrees(n: int, k: int) -> list[KParkingTree]:
    """All k-parking trees on n points, in the order of their words.

    Raises:
        GuardExceededError: If n exceeds the enumeration guard
    """
    return [word_to_tree(w) for w in enumerate_parking_words(n, k)]


def ktree_counts(n: int, k: int) -> dict[int, int]:
    """Number of k-parking trees by nonempty-node count minus one."""
    counts: dict[int, int] = {}
    for tree in enumerate_ktrees(n, k):
        ell = tree.nonempty_count - 1
        counts[ell] = counts.get(ell, 0) + 1
    return dict(sorted(counts.items()))


def _broods(node: TreeNode, k: int) -> list[tuple[TreeNode, ...]]:
    return [node.children[j : j + k] for j in range(0, len(node.children), k)]


def _absorb(
    node: TreeNode, k: int, i: int
) -> tuple[list[int], list[tuple[TreeNode, ...]]]:
    """Labels and kept broods of node once children of index > i are merged in.

    Broods of a merged child follow the brood it was taken from.
    """
    labels = list(node.label)
    broods: list[tuple[TreeNode, ...]] = []
    for brood in _broods(node, k):
        broods.append(brood[:i])
        for child in brood[i:]:
            if child.is_leaf:
                continue
            child_labels, child_broods = _absorb(child, k, i)
            labels.extend(child_labels)
            broods.extend(child_broods)
    return labels, broods


def _graft_on_rightmost_leaf(tree: TreeNode, subtree: TreeNode) -> TreeNode:
    return TreeNode(label=tree.label, children=graft_rightmost(tree.children, subtree))


def _stack(pieces: Sequence[TreeNode]) -> TreeNode:
    """Graft each nonempty piece on the rightmost leaf of the previous nonempty one."""
    nonempty = [p for p in pieces if not p.is_leaf]
    if not nonempty:
        return TreeNode.leaf()
    acc = nonempty[-1]
    for piece in reversed(nonempty[:-1]):
        acc = _graft_on_rightmost_leaf(piece, acc)
    return acc


def _merge(node: TreeNode, k: int, i: int) -> TreeNode:
    if node.is_leaf:
        return node
    labels, broods = _absorb(node, k, i)
    children = tuple(_stack([_merge(c, k, i) for c in brood]) for brood in broods)
    return TreeNode(label=tuple(labels), children=children)


def ktree_to_chain(tree: KParkingTree) -> tuple[NC2Pair, ...]:
    """The k-multichain phi_1 <= ... <= phi_k of a k-parking tree.

    The rank of phi_k is the number of nonempty nodes minus one.

    Raises:
        KTreeError: If the merged trees do not form a multichain
    """
    chain = tuple(
        tree_to_pair(make_tree(_merge(tree.root, tree.k, i), tree.n, 1))
        for i in range(1, tree.k + 1)
    )
    for a, b in zip(chain, chain[1:], strict=False):
        if not pp_leq(a, b):
            logger.error("Merged trees of %s are not increasing: %s, %s", tree, a, b)
            raise KTreeError(f"Tree {tree} does not give a multichain")
    return chain


def _vertex_maps(trees: Sequence[TreeNode]) -> list[dict[int, Block]]:
    maps: list[dict[int, Block]] = []
    for root in trees:
        owner: dict[int, Block] = {}
        for vertex in root.internal_nodes():
            owner.update((x, vertex.label) for x in vertex.label)
        maps.append(owner)
    return maps


def chain_to_ktree(chain: Sequence[AnyParking]) -> KParkingTree:
    """The k-parking tree of a multichain phi_1 <= ... <= phi_k.

    Every subtree of a vertex P of phi_k gives one brood of P. Its rightmost
    branch is cut where a vertex leaves P's vertex strictly later than the
    previous cut, and the cut pieces fill the brood at those indices.

    Raises:
        KTreeError: If the chain is empty, mixes sizes, or is not increasing
    """
    if not chain:
        raise KTreeError("A multichain needs at least one element")
    pairs = [to_pair(x) for x in chain]
    n, k = pairs[0].n, len(pairs)
    if any(p.n != n for p in pairs):
        raise KTreeError("Multichain elements live on different ground sets")
    for a, b in zip(pairs, pairs[1:], strict=False):
        if not pp_leq(a, b):
            raise KTreeError(f"{a} <= {b} fails: not a multichain")
    roots = [convert(p, "tree").root for p in pairs]
    owners = _vertex_maps(roots)

    def sep(p: TreeNode, d: TreeNode) -> int:
        a, b = p.label[0], d.label[0]
        return next((t for t in range(1, k + 1) if owners[t - 1][a] != owners[t - 1][b]), k + 1)

    def cut(p: TreeNode, node: TreeNode, f: int) -> tuple[TreeNode, list[tuple[int, TreeNode]]]:
        last = node.children[-1]
        if last.is_leaf:
            return node, []
        g = sep(p, last)
        if g > f:
            piece, deeper = cut(p, last, g)
            return (
                TreeNode(label=node.label, children=(*node.children[:-1], TreeNode.leaf())),
                [(g, piece), *deeper],
            )
        trimmed, deeper = cut(p, last, f)
        return TreeNode(label=node.label, children=(*node.children[:-1], trimmed)), deeper

    def build(node: TreeNode) -> TreeNode:
        children: list[TreeNode] = []
        for child in node.children:
            slots = [TreeNode.leaf()] * k
            if not child.is_leaf:
                f = sep(node, child)
                head, deeper = cut(node, child, f)
                for index, piece in [(f, head), *deeper]:
                    slots[index - 1] = build(piece)
            children.extend(slots)
        return TreeNode(label=node.label, children=tuple(children))

    return make_tree(build(roots[-1]), n, k)


def relation_tree(a: AnyParking, b: AnyParking) -> KParkingTree:
    """The 2-parking tree witnessing a <= b.

    Raises:
        KTreeError: If a <= b fails
    """
    return chain_to_ktree([a, b])


class KTreeCode(BaseModel):
    """Code of a k-parking tree: vertex sets, used half-edges, deletion order.

    Vertices are sorted by their minima. Half-edges are numbered 1..kn by
    listing the child positions of each vertex in that order.

    Attributes:
        blocks: Vertex labels sorted by minimum
        used: Numbers of the half-edges carrying a nonempty child
        word: Permutation of 1..len(used); the i-th letter is the rank in
            used of the half-edge above the i-th deleted leaf
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    k: int = Field(default=1, ge=1)
    blocks: tuple[Block, ...]
    used: tuple[int, ...]
    word: tuple[int, ...]

    @model_validator(mode="after")
    def validate_code(self) -> "KTreeCode":
        """Check sizes, half-edge range and that word is a permutation."""
        if sorted(x for b in self.blocks for x in b) != list(range(1, self.n + 1)):
            raise ValueError(f"Blocks {self.blocks} do not partition 1..{self.n}")
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise ValueError("Blocks must be sorted by their minima")
        if len(self.used) != len(self.blocks) - 1:
            raise ValueError(f"{len(self.blocks)} vertices need {len(self.blocks) - 1} half-edges")
        if list(self.used) != sorted(set(self.used)):
            raise ValueError("Used half-edges must be strictly increasing")
        if self.used and not 1 <= self.used[0] <= self.used[-1] <= self.k * self.n:
            raise ValueError(f"Half-edges must lie in 1..{self.k * self.n}")
        if sorted(self.word) != list(range(1, len(self.used) + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{len(self.used)}")
        return self

    @property
    def ell(self) -> int:
        """Number of nonempty nodes minus one."""
        return len(self.used)


def _offsets(blocks: Sequence[Block], k: int) -> list[int]:
    offsets = [0]
    for block in blocks[:-1]:
        offsets.append(offsets[-1] + k * len(block))
    return offsets


def ktree_code(tree: KParkingTree) -> KTreeCode:
    """Delete the smallest leaf repeatedly, recording its parent half-edge."""
    vertices = sorted(tree.root.internal_nodes(), key=lambda v: v.label[0])
    blocks = tuple(v.label for v in vertices)
    position = {b: r for r, b in enumerate(blocks)}
    offsets = _offsets(blocks, tree.k)
    parent: dict[Block, Block] = {}
    half_edge: dict[Block, int] = {}
    for vertex in vertices:
        for slot, child in enumerate(vertex.children, start=1):
            if not child.is_leaf:
                parent[child.label] = vertex.label
                half_edge[child.label] = offsets[position[vertex.label]] + slot
    used = tuple(sorted(half_edge.values()))
    number = {h: i for i, h in enumerate(used, start=1)}
    remaining = {v.label: sum(1 for c in v.children if not c.is_leaf) for v in vertices}
    leaves = [(b[0], b) for b in blocks if remaining[b] == 0 and b in parent]
    heapq.heapify(leaves)
    word: list[int] = []
    while leaves:
        _, leaf = heapq.heappop(leaves)
        word.append(number[half_edge[leaf]])
        up = parent[leaf]
        remaining[up] -= 1
        if remaining[up] == 0 and up in parent:
            heapq.heappush(leaves, (up[0], up))
    return KTreeCode(n=tree.n, k=tree.k, blocks=blocks, used=used, word=tuple(word))


def code_to_ktree(code: KTreeCode) -> KParkingTree:
    """Rebuild a k-parking tree by grafting the smallest complete vertex.

    Raises:
        KTreeError: If the code does not describe a tree
    """
    offsets = _offsets(code.blocks, code.k)

    def owner(h: int) -> tuple[int, int]:
        r = max(i for i, o in enumerate(offsets) if o < h)
        return r, h - offsets[r]

    pending = [0] * len(code.blocks)
    for h in code.used:
        pending[owner(h)[0]] += 1
    ready = [(b[0], r) for r, b in enumerate(code.blocks) if pending[r] == 0]
    heapq.heapify(ready)
    attached: dict[int, dict[int, int]] = {r: {} for r in range(len(code.blocks))}
    has_parent: set[int] = set()
    for letter in code.word:
        r, slot = owner(code.used[letter - 1])
        if not ready:
            raise KTreeError(f"No complete vertex left to graft at letter {letter}")
        _, child = heapq.heappop(ready)
        if slot in attached[r]:
            raise KTreeError(f"Half-edge {code.used[letter - 1]} is used twice")
        attached[r][slot] = child
        has_parent.add(child)
        pending[r] -= 1
        if pending[r] == 0:
            heapq.heappush(ready, (code.blocks[r][0], r))
    roots = [r for r in range(len(code.blocks)) if r not in has_parent]
    if len(roots) != 1:
        raise KTreeError(f"Code leaves {len(roots)} unattached vertices")

    def build(r: int) -> TreeNode:
        size = code.k * len(code.blocks[r])
        return TreeNode(
            label=code.blocks[r],
            children=tuple(
                build(attached[r][s]) if s in attached[r] else TreeNode.leaf()
                for s in range(1, size + 1)
            ),
        )

    try:
        return make_tree(build(roots[0]), code.n, code.k)
    except ValueError as e:
        raise KTreeError(f"Code does not describe a {code.k}-parking tree: {e}") from e
