"""Cluster parking functions: pairs (f, phi) of a forest and a parking element.

A forest f and phi = (pi, sigma) match when K(underline(f)) = pi. Ordered by
inclusion of forests and the parking order, the pairs form the face poset of
a simplicial complex whose homology agrees with that of the parking poset.
"""

import logging
from functools import cache
from math import comb
from typing import cast

import numpy as np
from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from src.config import LOGGER_NAME, MAX_CLUSTER_N, check_guard
from src.enumeration.formulas import whitney_first_oracle
from src.nc.partitions import kreweras
from src.nc.permutations import Permutation, cycle_type_representatives
from src.parking.conversions import act
from src.parking.objects import NC2Pair
from src.poset.finite import FinitePoset
from src.poset.parking_poset import build_pp_poset
from src.topology.complex import ChainComplex, HomologyError
from src.topology.forests import AlternatingForest, alternating_forests
from src.topology.order_complex import lefschetz_character, pp_order_complex

logger = logging.getLogger(LOGGER_NAME)


class ClusterParkingFunction(BaseModel):
    """A pair (f, phi) with K(underline(f)) equal to the partition of phi."""

    model_config = ConfigDict(frozen=True)

    forest: AlternatingForest
    phi: NC2Pair

    @model_validator(mode="after")
    def validate_match(self) -> "ClusterParkingFunction":
        """Ensure the forest and the parking element sit over the same partition."""
        if kreweras(self.forest.underline()) != self.phi.pi:
            raise ValueError(f"K({self.forest.underline()}) != {self.phi.pi}")
        return self

    @property
    def rank(self) -> int:
        """Number of edges of the forest, also the rank of phi."""
        return self.forest.rank

    def act(self, s: Permutation) -> "ClusterParkingFunction":
        """s . (f, phi) = (f, s . phi)."""
        return ClusterParkingFunction(forest=self.forest, phi=act(s, self.phi))

    def __str__(self) -> str:
        return f"({self.forest}, {self.phi})"


@cache
def cluster_poset(n: int) -> FinitePoset:
    """The poset of cluster parking functions on n points.

    Raises:
        GuardExceededError: If n exceeds the cluster guard
    """
    check_guard("n", n, MAX_CLUSTER_N)
    pp = build_pp_poset(n)
    forests = alternating_forests(n)
    by_partition: dict[object, list[int]] = {}
    for i, x in enumerate(pp.elements):
        by_partition.setdefault(cast(NC2Pair, x).pi, []).append(i)
    members: list[tuple[int, int]] = [
        (a, i) for a, f in enumerate(forests) for i in by_partition[kreweras(f.underline())]
    ]
    edge_sets = [set(f.edges) for f in forests]
    contained = np.array([[ea <= eb for eb in edge_sets] for ea in edge_sets], dtype=bool)
    fs = np.array([a for a, _ in members])
    ps = np.array([i for _, i in members])
    leq = contained[np.ix_(fs, fs)] & pp.leq[np.ix_(ps, ps)]
    elements = [
        ClusterParkingFunction(forest=forests[a], phi=cast(NC2Pair, pp.elements[i]))
        for a, i in members
    ]
    poset = FinitePoset(elements, leq, [e.rank for e in elements], name=f"Cluster_{n}")
    logger.info("Built cluster poset n=%d: %d elements, ranks %s", n, len(poset), poset.rank_sizes())
    return poset


def _element(poset: FinitePoset, i: int) -> ClusterParkingFunction:
    return cast(ClusterParkingFunction, poset.elements[i])


def ideals_are_boolean(poset: FinitePoset) -> bool:
    """Every principal order ideal has binom(r, j) elements of each rank j."""
    ranks = np.array(poset.ranks)
    for x in range(len(poset)):
        r = poset.ranks[x]
        below = ranks[poset.leq[:, x]]
        counts = np.bincount(below, minlength=r + 1)
        if list(counts) != [comb(r, j) for j in range(r + 1)]:
            return False
    return True


def supports(poset: FinitePoset) -> list[tuple[int, ...]]:
    """Rank-one elements below each element, as sorted index tuples."""
    atoms = [i for i, r in enumerate(poset.ranks) if r == 1]
    return [tuple(v for v in atoms if poset.leq[v, x]) for x in range(len(poset))]


def support_is_injective(poset: FinitePoset) -> bool:
    """Distinct elements have distinct sets of rank-one elements below them."""
    faces = supports(poset)
    return len(set(faces)) == len(faces)


@cache
def cluster_complex(n: int) -> ChainComplex:
    """The simplicial complex on rank-one cluster parking functions.

    Raises:
        HomologyError: If the supports are not closed under taking subsets
    """
    return ChainComplex.from_faces(supports(cluster_poset(n)), name=f"Cluster_{n}")


def cluster_whitney(n: int) -> list[int]:
    """W_ell of the cluster poset."""
    sizes = cluster_poset(n).rank_sizes()
    return [sizes[ell] if ell < len(sizes) else 0 for ell in range(n)]


def cluster_character(n: int, sigma: Permutation) -> int:
    """Trace of sigma on the top homology of the cluster complex.

    sigma fixes (f, phi) only if it fixes every vertex below, so each fixed
    face contributes +1 to the trace on chains.

    Raises:
        HomologyError: If the homology is not concentrated
    """
    complex_ = cluster_complex(n)
    degree = complex_.concentrated_degree()
    if degree is None:
        raise HomologyError(f"Homology of {complex_.name} is not concentrated")
    poset = cluster_poset(n)
    lefschetz = sum(
        (-1) ** (_element(poset, i).rank - 1)
        for i in range(len(poset))
        if _element(poset, i).act(sigma) == _element(poset, i)
    )
    return (-1) ** degree * lefschetz


class ClusterReport(BaseModel):
    """Checks relating the cluster complex to the parking poset."""

    model_config = ConfigDict(frozen=True)

    n: int
    elements: int
    whitney: tuple[int, ...]
    signed_whitney_first: tuple[int, ...]
    boolean_ideals: bool
    support_injective: bool
    homology: tuple[int, ...]
    order_homology: tuple[int, ...]
    characters: tuple[tuple[str, int, int], ...]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """All relations hold."""
        return (
            self.whitney == self.signed_whitney_first
            and self.boolean_ideals
            and self.support_injective
            and self.homology == self.order_homology
            and all(a == b for _, a, b in self.characters)
        )


def verify_cluster(n: int) -> ClusterReport:
    """Build the cluster complex on n points and check it against the parking poset.

    Raises:
        GuardExceededError: If n exceeds the cluster guard
    """
    poset = cluster_poset(n)
    characters = tuple(
        (
            "".join(str(c) for c in sigma.cycle_type()),
            cluster_character(n, sigma),
            lefschetz_character(n, sigma),
        )
        for sigma in cycle_type_representatives(n)
    )
    report = ClusterReport(
        n=n,
        elements=len(poset),
        whitney=tuple(cluster_whitney(n)),
        signed_whitney_first=tuple((-1) ** ell * w for ell, w in enumerate(whitney_first_oracle(n))),
        boolean_ideals=ideals_are_boolean(poset),
        support_injective=support_is_injective(poset),
        homology=tuple(cluster_complex(n).homology_ranks().values()),
        order_homology=tuple(pp_order_complex(n).homology_ranks().values()),
        characters=characters,
    )
    logger.info("Cluster check n=%d: passed=%s", n, report.passed)
    return report
