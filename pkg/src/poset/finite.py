"""Generic finite posets over interned elements.

The order is stored as a boolean numpy matrix (leq[i, j] iff element i <=
element j); covers are extracted from it and kept as a networkx digraph.
Every other module builds its posets on this kernel.
"""

import logging
from collections.abc import Callable, Hashable, Iterable, Sequence
from typing import Any, Literal

import networkx as nx
import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from src.config import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)

BoolMatrix = NDArray[np.bool_]


class PosetError(Exception):
    """Raised when a poset is malformed or a query needs missing structure."""

    pass


class HatTop(BaseModel):
    """The adjoined maximum 1-hat."""

    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        return "TOP"


TOP = HatTop()


class FinitePoset:
    """An immutable finite poset.

    Attributes:
        elements: Interned elements; positions are the indices used by every
            query below
        leq: Boolean order matrix
        covers: Boolean cover matrix
        hasse: Cover digraph on indices
        ranks: Rank of each element
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        leq: BoolMatrix,
        ranks: Sequence[int] | None = None,
        name: str = "P",
    ) -> None:
        size = len(elements)
        if leq.shape != (size, size):
            raise PosetError(f"Order matrix of shape {leq.shape} for {size} elements")
        self.name = name
        self.elements: tuple[Hashable, ...] = tuple(elements)
        self.index: dict[Hashable, int] = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != size:
            raise PosetError("Elements must be distinct")
        self.leq: BoolMatrix = np.array(leq, dtype=bool)
        self.leq.setflags(write=False)
        lt = self.leq & ~np.eye(size, dtype=bool)
        # float32 products are exact at these sizes and go through BLAS
        lt_f = lt.astype(np.float32)
        self.covers: BoolMatrix = lt & ~((lt_f @ lt_f) > 0)
        self.covers.setflags(write=False)
        self.hasse: nx.DiGraph = nx.DiGraph()
        self.hasse.add_nodes_from(range(size))
        self.hasse.add_edges_from((int(i), int(j)) for i, j in np.argwhere(self.covers))
        self.ranks: tuple[int, ...] = tuple(ranks) if ranks is not None else self.hasse_rank()
        self._mobius_rows: dict[int, list[int]] = {}
        logger.debug("Built poset %s with %d elements", name, size)

    @classmethod
    def from_relation(
        cls,
        elements: Sequence[Hashable],
        relation: Callable[[Any, Any], bool],
        ranks: Sequence[int] | None = None,
        name: str = "P",
    ) -> "FinitePoset":
        """Build a poset by evaluating relation(a, b) on every pair."""
        size = len(elements)
        leq = np.zeros((size, size), dtype=bool)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                leq[i, j] = i == j or relation(a, b)
        return cls(elements, leq, ranks, name)

    @classmethod
    def from_covers(
        cls,
        elements: Sequence[Hashable],
        cover_pairs: Iterable[tuple[int, int]],
        ranks: Sequence[int] | None = None,
        name: str = "P",
    ) -> "FinitePoset":
        """Build a poset from cover index pairs via reflexive transitive closure.

        Raises:
            PosetError: If the cover relation has a cycle
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        graph.add_edges_from(cover_pairs)
        if not nx.is_directed_acyclic_graph(graph):
            raise PosetError("Cover relation contains a cycle")
        closure = nx.transitive_closure_dag(graph)
        leq = np.eye(len(elements), dtype=bool)
        for i, j in closure.edges():
            leq[i, j] = True
        return cls(elements, leq, ranks, name)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset({self.name!r}, size={len(self)})"

    def index_of(self, x: Hashable) -> int:
        """Return the index of element x.

        Raises:
            PosetError: If x is not an element
        """
        try:
            return self.index[x]
        except KeyError as e:
            raise PosetError(f"{x} is not an element of {self.name}") from e

    def is_leq(self, x: Hashable, y: Hashable) -> bool:
        """Order query on elements."""
        return bool(self.leq[self.index_of(x), self.index_of(y)])

    def minimal(self) -> list[int]:
        """Indices with nothing strictly below."""
        return [i for i in range(len(self)) if self.leq[:, i].sum() == 1]

    def maximal(self) -> list[int]:
        """Indices with nothing strictly above."""
        return [i for i in range(len(self)) if self.leq[i, :].sum() == 1]

    @property
    def bottom(self) -> int | None:
        """Index of the unique minimum, if any."""
        mins = self.minimal()
        return mins[0] if len(mins) == 1 and self.leq[mins[0]].all() else None

    @property
    def top(self) -> int | None:
        """Index of the unique maximum, if any."""
        maxs = self.maximal()
        return maxs[0] if len(maxs) == 1 and self.leq[:, maxs[0]].all() else None

    def upper_covers(self, i: int) -> list[int]:
        """Indices covering i."""
        return sorted(self.hasse.successors(i))

    def lower_covers(self, i: int) -> list[int]:
        """Indices covered by i."""
        return sorted(self.hasse.predecessors(i))

    def rank_sizes(self) -> tuple[int, ...]:
        """Number of elements of each rank."""
        if not self.ranks:
            return ()
        counts = np.bincount(np.array(self.ranks), minlength=max(self.ranks) + 1)
        return tuple(int(c) for c in counts)

    def hasse_rank(self) -> tuple[int, ...]:
        """Ranks recomputed as longest-path distance from a minimal element."""
        ranks = [0] * len(self)
        for node in nx.topological_sort(self.hasse):
            for succ in self.hasse.successors(node):
                ranks[succ] = max(ranks[succ], ranks[node] + 1)
        return tuple(ranks)

    def check_invariants(self) -> None:
        """Check acyclicity, rank steps and that covers generate the order.

        Raises:
            PosetError: On the first violated invariant
        """
        if not nx.is_directed_acyclic_graph(self.hasse):
            raise PosetError(f"Hasse diagram of {self.name} has a cycle")
        if not (self.leq & self.leq.T == np.eye(len(self), dtype=bool)).all():
            raise PosetError(f"Order of {self.name} is not antisymmetric")
        for i, j in self.hasse.edges():
            if self.ranks[j] != self.ranks[i] + 1:
                raise PosetError(f"Rank does not step by one along cover {i} < {j}")
        closure = nx.transitive_closure_dag(self.hasse)
        rebuilt = np.eye(len(self), dtype=bool)
        for i, j in closure.edges():
            rebuilt[i, j] = True
        if not (rebuilt == self.leq).all():
            raise PosetError(f"Covers of {self.name} do not generate its order")

    def with_top(self) -> "FinitePoset":
        """Adjoin a new maximum TOP."""
        size = len(self)
        leq = np.zeros((size + 1, size + 1), dtype=bool)
        leq[:size, :size] = self.leq
        leq[:, size] = True
        top_rank = max(self.ranks, default=-1) + 1
        return FinitePoset(
            [*self.elements, TOP], leq, [*self.ranks, top_rank], name=f"{self.name}+TOP"
        )

    def dual(self) -> "FinitePoset":
        """The opposite order, ranked from the new bottom."""
        return FinitePoset(self.elements, self.leq.T.copy(), None, name=f"{self.name}*")

    def subposet(self, indices: Sequence[int], name: str | None = None) -> "FinitePoset":
        """Induced subposet on the given indices (in that order)."""
        idx = np.array(indices, dtype=int)
        return FinitePoset(
            [self.elements[i] for i in indices],
            self.leq[np.ix_(idx, idx)],
            None,
            name=name or f"{self.name}|sub",
        )

    def interval(self, x: int, y: int) -> "FinitePoset":
        """The closed interval [x, y].

        Raises:
            PosetError: If x <= y fails
        """
        if not self.leq[x, y]:
            raise PosetError(f"Empty interval: {self.elements[x]} is not below {self.elements[y]}")
        members = np.nonzero(self.leq[x] & self.leq[:, y])[0]
        return self.subposet([int(i) for i in members], name=f"[{x},{y}]")

    def join(self, i: int, j: int) -> int | None:
        """Least upper bound of i and j, or None if there is none."""
        bounds = np.nonzero(self.leq[i] & self.leq[j])[0]
        for u in bounds:
            if self.leq[u, bounds].all():
                return int(u)
        return None

    def linear_extension(self) -> list[int]:
        """Indices in a deterministic topological order."""
        return list(nx.lexicographical_topological_sort(self.hasse))

    def mobius_row(self, x: int) -> list[int]:
        """mu(x, y) for every y, by recursive summation, memoized per x."""
        if x not in self._mobius_rows:
            lt = self.leq & ~np.eye(len(self), dtype=bool)
            mu = [0] * len(self)
            mu[x] = 1
            above = self.leq[x]
            for y in self.linear_extension():
                if y == x or not above[y]:
                    continue
                below = np.nonzero(above & lt[:, y])[0]
                mu[y] = -sum(mu[int(z)] for z in below)
            self._mobius_rows[x] = mu
        return self._mobius_rows[x]


def mobius(poset: FinitePoset, x: int, y: int) -> int:
    """Mobius function mu(x, y); 0 when x <= y fails."""
    if not poset.leq[x, y]:
        return 0
    return poset.mobius_row(x)[y]


def _multichain_ends(poset: FinitePoset, k: int) -> NDArray[Any]:
    """f[y] = number of multichains x_1 <= ... <= x_k = y."""
    size = len(poset)
    exact = size > 0 and k * np.log2(max(size, 2)) < 62
    dtype: Any = np.int64 if exact else object
    ends = np.ones(size, dtype=dtype)
    order = poset.leq.astype(dtype)
    for _ in range(k - 1):
        ends = order.T @ ends
    return ends


def zeta_count(poset: FinitePoset, k: int) -> int:
    """Number of multichains x_1 <= x_2 <= ... <= x_k (1 when k = 0).

    Raises:
        PosetError: If k is negative
    """
    if k < 0:
        raise PosetError(f"Multichain length must be nonnegative, got {k}")
    if k == 0:
        return 1
    return int(sum(int(v) for v in _multichain_ends(poset, k)))


def multichains_by_top_rank(poset: FinitePoset, k: int) -> dict[int, int]:
    """k-multichain counts grouped by the rank of their largest element."""
    if k < 1:
        raise PosetError(f"Multichain length must be positive, got {k}")
    counts: dict[int, int] = {}
    for y, value in enumerate(_multichain_ends(poset, k)):
        rank = poset.ranks[y]
        counts[rank] = counts.get(rank, 0) + int(value)
    return dict(sorted(counts.items()))


def whitney(poset: FinitePoset, kind: Literal["first", "second"], ell: int) -> int:
    """Whitney numbers.

    First kind: w_ell = sum of mu(0-hat, x) over x of rank ell.
    Second kind: W_ell = number of elements of rank ell.

    Raises:
        PosetError: If the first kind is asked of a poset without bottom
    """
    members = [i for i, r in enumerate(poset.ranks) if r == ell]
    if kind == "second":
        return len(members)
    bottom = poset.bottom
    if bottom is None:
        raise PosetError(f"{poset.name} has no bottom element")
    row = poset.mobius_row(bottom)
    return sum(row[i] for i in members)


def maximal_chains(poset: FinitePoset) -> list[tuple[int, ...]]:
    """All maximal chains as index tuples, sorted."""
    tops = poset.maximal()
    chains: list[tuple[int, ...]] = []
    for source in poset.minimal():
        if source in tops:
            chains.append((source,))
            continue
        chains.extend(tuple(path) for path in nx.all_simple_paths(poset.hasse, source, tops))
    return sorted(chains)
