"""Noncrossing alternating forests and the complex they form.

Edges {i, j} with i < j are the vertices of the complex; a face is a forest
with no two edges {i, j}, {k, l} such that i < k <= j < l.
"""

import logging
from collections import Counter
from functools import cache
from math import prod

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import LOGGER_NAME, MAX_FOREST_N, check_guard
from src.nc.numbers import catalan
from src.nc.partitions import NoncrossingPartition, enumerate_noncrossing, kreweras
from src.nc.permutations import Permutation
from src.parking.conversions import pair_to_tree
from src.parking.objects import NC2Pair, TreeNode
from src.poset.finite import whitney
from src.poset.parking_poset import nc_poset
from src.topology.complex import ChainComplex

logger = logging.getLogger(LOGGER_NAME)

Edge = tuple[int, int]


def edges_conflict(a: Edge, b: Edge) -> bool:
    """True if {a, b} contains i < k <= j < l with a = {i, j}, b = {k, l} or the reverse."""
    (i, j), (k, l) = sorted((a, b))
    return i < k <= j < l


class AlternatingForest(BaseModel):
    """A noncrossing alternating forest on {1..n}, stored by its sorted edges."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    edges: tuple[Edge, ...] = ()

    @model_validator(mode="after")
    def validate_forest(self) -> "AlternatingForest":
        """Check edge range, the forbidden pattern and acyclicity."""
        if list(self.edges) != sorted(set(self.edges)):
            raise ValueError("Edges must be distinct and sorted")
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"Edge {(i, j)} is not a pair i < j in 1..{self.n}")
        for a in self.edges:
            for b in self.edges:
                if a < b and edges_conflict(a, b):
                    raise ValueError(f"Edges {a} and {b} cross or do not alternate")
        if not nx.is_forest(self.graph()):
            raise ValueError(f"Edges {self.edges} contain a cycle")
        return self

    def graph(self) -> nx.Graph:
        """The forest as an undirected graph on 1..n."""
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def underline(self) -> NoncrossingPartition:
        """Connected components as a noncrossing partition."""
        return NoncrossingPartition.from_blocks(self.n, nx.connected_components(self.graph()))

    @property
    def rank(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def __str__(self) -> str:
        return "{" + ",".join(f"{i}{j}" for i, j in self.edges) + "}"


def candidate_edges(n: int) -> list[Edge]:
    """All pairs i < j, in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@cache
def alternating_forests(n: int) -> list[AlternatingForest]:
    """Every noncrossing alternating forest on n points, by edge count then edges.

    Raises:
        GuardExceededError: If n exceeds the forest guard
    """
    check_guard("n", n, MAX_FOREST_N)
    candidates = candidate_edges(n)
    found: list[tuple[Edge, ...]] = []

    def extend(start: int, chosen: tuple[Edge, ...], components: nx.utils.UnionFind) -> None:
        found.append(chosen)
        for position in range(start, len(candidates)):
            edge = candidates[position]
            if any(edges_conflict(edge, other) for other in chosen):
                continue
            if components[edge[0]] == components[edge[1]]:
                continue
            grown = nx.utils.UnionFind(range(1, n + 1))
            for a, b in (*chosen, edge):
                grown.union(a, b)
            extend(position + 1, (*chosen, edge), grown)

    extend(0, (), nx.utils.UnionFind(range(1, n + 1)))
    forests = [AlternatingForest(n=n, edges=e) for e in sorted(found, key=lambda e: (len(e), e))]
    logger.debug("Generated %d alternating forests for n=%d", len(forests), n)
    return forests


def boundary_forests(n: int) -> list[AlternatingForest]:
    """Forests avoiding the edge {1, n}."""
    return [f for f in alternating_forests(n) if (1, n) not in f.edges]


def facets(n: int) -> list[AlternatingForest]:
    """Noncrossing alternating trees, i.e. forests with n - 1 edges."""
    return [f for f in alternating_forests(n) if f.rank == n - 1]


def forest_complex(forests: list[AlternatingForest], name: str) -> ChainComplex:
    """Simplicial complex whose vertices are edges and whose faces are the forests."""
    index = {e: i for i, e in enumerate(candidate_edges(forests[0].n))}
    return ChainComplex.from_faces(([index[e] for e in f.edges] for f in forests), name=name)


def is_cone(n: int) -> bool:
    """Every forest avoiding {1, n} stays a forest once {1, n} is added."""
    faces = {f.edges for f in alternating_forests(n)}
    return all(tuple(sorted((*f.edges, (1, n)))) in faces for f in boundary_forests(n))


def fiber_counts(n: int) -> dict[NoncrossingPartition, int]:
    """Number of forests with each component partition."""
    return dict(Counter(f.underline() for f in alternating_forests(n)))


def fiber_identity_holds(n: int) -> bool:
    """#{f : underline(f) = pi} equals the Catalan product over the blocks of pi."""
    counts = fiber_counts(n)
    return all(
        counts.get(pi, 0) == prod(catalan(len(b) - 1) for b in pi.blocks)
        for pi in enumerate_noncrossing(n)
    )


def forest_whitney(n: int) -> list[int]:
    """W_ell(Delta_n): forests with ell edges."""
    counts = Counter(f.rank for f in alternating_forests(n))
    return [counts.get(ell, 0) for ell in range(n)]


def forest_whitney_relation_holds(n: int) -> bool:
    """W_ell(Delta_n) = (-1)^ell w_ell(NC_n) for every ell."""
    poset = nc_poset(n)
    signed = [(-1) ** ell * whitney(poset, "first", ell) for ell in range(n)]
    return forest_whitney(n) == signed


def _right_branch(node: TreeNode) -> int:
    size = 0
    while not node.is_leaf:
        size += 1
        node = node.children[-1]
    return size


def right_branch_sizes(pi: NoncrossingPartition) -> list[tuple[int, int]]:
    """Pairs (|b|, |RB(T_b)|) over the blocks b of K(pi).

    T_b is the parking tree of pi restricted to the points min b .. max b - 1.
    """
    sizes: list[tuple[int, int]] = []
    for block in kreweras(pi).blocks:
        points = range(block[0], block[-1])
        if not points:
            sizes.append((len(block), 0))
            continue
        offset = block[0] - 1
        inner = [tuple(x - offset for x in b) for b in pi.blocks if set(b) <= set(points)]
        size = len(points)
        if sum(len(b) for b in inner) != size:
            logger.warning("Points %s under %s are not a union of blocks of %s", points, block, pi)
            sizes.append((len(block), -1))
            continue
        restricted = NoncrossingPartition.from_blocks(size, inner)
        tree = pair_to_tree(NC2Pair(pi=restricted, sigma=Permutation.identity(size)))
        sizes.append((len(block), _right_branch(tree.root)))
    return sizes


def right_branch_check(n: int) -> bool:
    """|b| = |RB(T_b)| + 1 for every block b of every Kreweras complement."""
    return all(
        size == branch + 1
        for pi in enumerate_noncrossing(n)
        for size, branch in right_branch_sizes(pi)
    )
