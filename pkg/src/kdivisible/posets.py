"""k-divisible noncrossing partitions and 2-partitions.

An element of NC_n^(k) is a multichain pi_1 <= ... <= pi_k of NC_n, ordered
by comparing relative Kreweras complements step by step, with pi_0 = 0_n.
An element of the k-divisible parking poset is such a multichain together
with a parking element over pi_k; the rest of the parking multichain is
recovered by descending from it.
"""

import logging
from functools import cache
from typing import Any, Literal, cast

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from src.config import (
    LOGGER_NAME,
    MAX_EDELMAN_NC_SIZE,
    MAX_EDELMAN_PP_SIZE,
    MAX_K_HOMOLOGY_N,
    MAX_K_POSET_K,
    MAX_K_POSET_N,
    check_guard,
)
from src.enumeration.characters import character_eval, character_oracle, fixed_prime_word_count
from src.enumeration.formulas import zeta_closed
from src.nc.numbers import fuss_catalan
from src.nc.partitions import (
    NoncrossingPartition,
    enumerate_noncrossing,
    nc_leq,
    relative_kreweras,
)
from src.nc.permutations import Permutation, cycle_type_representatives
from src.parking.conversions import act
from src.parking.generation import enumerate_parking
from src.parking.objects import NC2Pair
from src.poset.finite import BoolMatrix, FinitePoset, zeta_count
from src.poset.parking_poset import build_pp_poset, descend, eta_masks, nc_poset
from src.topology.complex import ChainComplex
from src.topology.order_complex import fixed_indices, hopf_character, order_complex

logger = logging.getLogger(LOGGER_NAME)

EdelmanKind = Literal["nc", "pp"]


class KDivisibleError(Exception):
    """Raised when a k-divisible construction is asked for something it cannot build."""

    pass


def _is_prime_partition(p: NoncrossingPartition) -> bool:
    return p.block_of(1) == p.block_of(p.n)


class KChainNC(BaseModel):
    """A k-multichain pi_1 <= ... <= pi_k of NC_n."""

    model_config = ConfigDict(frozen=True)

    chain: tuple[NoncrossingPartition, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_chain(self) -> "KChainNC":
        """Check sizes agree and the chain weakly increases."""
        n = self.chain[0].n
        if any(p.n != n for p in self.chain):
            raise ValueError("Partitions of a chain must share their ground set")
        for lower, upper in zip(self.chain, self.chain[1:], strict=False):
            if not nc_leq(lower, upper):
                raise ValueError(f"{lower} <= {upper} fails")
        return self

    @property
    def n(self) -> int:
        return self.chain[0].n

    @property
    def k(self) -> int:
        return len(self.chain)

    @property
    def top(self) -> NoncrossingPartition:
        return self.chain[-1]

    @property
    def rank(self) -> int:
        """|pi_k| - 1."""
        return self.top.num_blocks - 1

    def complements(self) -> tuple[NoncrossingPartition, ...]:
        """K(pi_(i-1), pi_i) for i = 1..k, with pi_0 = 0_n."""
        previous = (NoncrossingPartition.zero(self.n), *self.chain[:-1])
        return tuple(relative_kreweras(a, b) for a, b in zip(previous, self.chain, strict=True))

    def is_prime(self) -> bool:
        """1 and n share a block of pi_1, the coarsest partition of the chain.

        Reading primeness off pi_k instead gives 7 primes in the parking
        version at n = 3, k = 2, not (kn - 1)^(n - 1) = 25.
        """
        return _is_prime_partition(self.chain[0])

    def __str__(self) -> str:
        return " <= ".join(str(p) for p in self.chain)


class KChainPP(BaseModel):
    """The tuple (pi_1, ..., pi_k, rho_k, lambda_k), with phi_k stored as a pair."""

    model_config = ConfigDict(frozen=True)

    partitions: KChainNC
    top: NC2Pair

    @model_validator(mode="after")
    def validate_top(self) -> "KChainPP":
        """phi_k must sit over pi_k."""
        if self.top.pi != self.partitions.top:
            raise ValueError(f"Top element over {self.top.pi}, expected {self.partitions.top}")
        return self

    @property
    def rank(self) -> int:
        return self.partitions.rank

    def multichain(self) -> tuple[NC2Pair, ...]:
        """phi_1 <= ... <= phi_k, each phi_i the unique element below phi_k over pi_i."""
        return tuple(descend(self.top, p) for p in self.partitions.chain)

    def act(self, s: Permutation) -> "KChainPP":
        """The action moves phi_k and fixes every pi_i."""
        return KChainPP(partitions=self.partitions, top=act(s, self.top))

    def is_prime(self) -> bool:
        """phi_1 is prime, i.e. 1 and n share a block of pi_1."""
        return self.partitions.is_prime()

    def __str__(self) -> str:
        return " <= ".join(str(x) for x in self.multichain())


def _multichains(leq: BoolMatrix, k: int) -> list[tuple[int, ...]]:
    """Index tuples x_1 <= ... <= x_k, in lexicographic order."""
    size = leq.shape[0]
    chains: list[tuple[int, ...]] = [(i,) for i in range(size)]
    for _ in range(k - 1):
        chains = [(*c, j) for c in chains for j in range(size) if leq[c[-1], j]]
    return chains


def _check_k_guards(n: int, k: int) -> None:
    check_guard("n", n, MAX_K_POSET_N)
    check_guard("k", k, MAX_K_POSET_K)
    if k < 1:
        raise KDivisibleError(f"k must be positive, got {k}")


@cache
def build_nc_k(n: int, k: int) -> FinitePoset:
    """NC_n^(k), ranked by |pi_k| - 1.

    (pi) <= (tau) iff K(pi_(i-1), pi_i) >= K(tau_(i-1), tau_i) for every i.

    Raises:
        GuardExceededError: If n or k exceeds its guard
        KDivisibleError: If k < 1
    """
    _check_k_guards(n, k)
    nc = nc_poset(n)
    chains = _multichains(nc.leq, k)
    elements = [
        KChainNC(chain=tuple(cast(NoncrossingPartition, nc.elements[i]) for i in c)) for c in chains
    ]
    comps = np.array(
        [[nc.index_of(q) for q in e.complements()] for e in elements], dtype=int
    ).reshape(len(elements), k)
    # leq[a, b] = all_i K_b,i <= K_a,i in NC_n
    leq = nc.leq[comps[None, :, :], comps[:, None, :]].all(axis=2)
    poset = FinitePoset(elements, leq, [e.rank for e in elements], name=f"NC_{n}^({k})")
    logger.info("Built %s: %d elements, ranks %s", poset.name, len(poset), poset.rank_sizes())
    return poset


@cache
def build_pp_k(n: int, k: int) -> FinitePoset:
    """The k-divisible parking poset: NC_n^(k) order on partitions and parking order on tops.

    Raises:
        GuardExceededError: If n or k exceeds its guard
        KDivisibleError: If k < 1
    """
    _check_k_guards(n, k)
    nck = build_nc_k(n, k)
    pp = build_pp_poset(n)
    over: dict[NoncrossingPartition, list[int]] = {}
    for i, x in enumerate(pp.elements):
        over.setdefault(cast(NC2Pair, x).pi, []).append(i)
    members = [
        (a, i)
        for a, chain in enumerate(nck.elements)
        for i in over[cast(KChainNC, chain).top]
    ]
    left = np.array([a for a, _ in members])
    right = np.array([i for _, i in members])
    leq = nck.leq[np.ix_(left, left)] & pp.leq[np.ix_(right, right)]
    elements = [
        KChainPP(partitions=cast(KChainNC, nck.elements[a]), top=cast(NC2Pair, pp.elements[i]))
        for a, i in members
    ]
    poset = FinitePoset(elements, leq, [e.rank for e in elements], name=f"PP_{n}^({k})")
    logger.info("Built %s: %d elements, ranks %s", poset.name, len(poset), poset.rank_sizes())
    return poset


def projection(n: int, k: int) -> NDArray[np.int64]:
    """Index in NC_n^(k) of the partition chain of each element of the parking version."""
    nck = build_nc_k(n, k)
    return np.array(
        [nck.index_of(cast(KChainPP, x).partitions) for x in build_pp_k(n, k).elements],
        dtype=np.int64,
    )


def descent_is_unique(n: int, k: int) -> bool:
    """Below each x, every partition chain under that of x is reached exactly once."""
    nck = build_nc_k(n, k)
    ppk = build_pp_k(n, k)
    proj = projection(n, k)
    for x in range(len(ppk)):
        reached = np.bincount(proj[ppk.leq[:, x]], minlength=len(nck))
        if not (reached == nck.leq[:, proj[x]].astype(np.int64)).all():
            logger.warning("Descent below %s is not unique", ppk.elements[x])
            return False
    return True


def rank_matches_hasse(poset: FinitePoset) -> bool:
    """Stored ranks agree with ranks recomputed from the Hasse diagram."""
    return poset.ranks == poset.hasse_rank()


def _is_divisible(p: NoncrossingPartition, k: int) -> bool:
    return all(len(b) % k == 0 for b in p.blocks)


def edelman_divisible(n: int, k: int, which: EdelmanKind = "nc") -> FinitePoset:
    """Full subposet of NC_kn (or the parking poset on kn points) whose blocks have sizes divisible by k.

    Raises:
        GuardExceededError: If kn exceeds the guard for the chosen kind
        KDivisibleError: If which is unknown
    """
    size = k * n
    if which == "nc":
        check_guard("kn", size, MAX_EDELMAN_NC_SIZE)
        parts = [p for p in enumerate_noncrossing(size) if _is_divisible(p, k)]
        return FinitePoset.from_relation(
            parts, nc_leq, [p.num_blocks - 1 for p in parts], name=f"NC_{size}[{k}]"
        )
    if which == "pp":
        check_guard("kn", size, MAX_EDELMAN_PP_SIZE)
        elements = [x for x in enumerate_parking(size) if _is_divisible(x.pi, k)]
        masks = eta_masks(elements)
        leq = ((masks[None, :, :] & ~masks[:, None, :]) == 0).all(axis=2)
        return FinitePoset(elements, leq, [x.rank for x in elements], name=f"PP_{size}[{k}]")
    raise KDivisibleError(f"Unknown kind {which!r}; expected 'nc' or 'pp'")


def edelman_agreement(n: int, k: int) -> bool:
    """The divisible subposet of NC_kn and NC_n^(k) have the same rank sizes."""
    edelman = edelman_divisible(n, k, "nc").rank_sizes()
    multichains = build_nc_k(n, k).rank_sizes()
    if edelman != multichains:
        logger.warning("Rank sizes differ at n=%d k=%d: %s != %s", n, k, edelman, multichains)
    return edelman == multichains


def nc_multichain_identity(n: int, k: int, j: int) -> bool:
    """j-multichains of NC_n^(k) are as many as jk-multichains of NC_n."""
    return zeta_count(build_nc_k(n, k), j) == zeta_count(nc_poset(n), j * k)


def pp_multichain_identity(n: int, k: int, j: int) -> bool:
    """j-multichains of the k-divisible parking poset number (njk + 1)^(n - 1)."""
    return zeta_count(build_pp_k(n, k), j) == zeta_closed(n, j * k)


def k_prime_filter(poset: FinitePoset) -> list[int]:
    """Indices of prime elements of NC_n^(k) or of its parking version.

    Raises:
        KDivisibleError: If the poset holds neither kind of chain
    """
    primes: list[int] = []
    for i, x in enumerate(poset.elements):
        if not isinstance(x, KChainNC | KChainPP):
            raise KDivisibleError(f"{poset.name} does not hold k-divisible chains")
        if x.is_prime():
            primes.append(i)
    return primes


def k_prime_table(n: int, k: int) -> list[dict[str, Any]]:
    """Rows (cycle_type, chains, words, formula, match) of sigma-fixed prime elements.

    chains counts fixed prime elements of the k-divisible parking poset,
    words counts fixed k-parking words passing the prime word criterion.
    """
    poset = build_pp_k(n, k)
    primes = set(k_prime_filter(poset))
    rows: list[dict[str, Any]] = []
    for sigma in cycle_type_representatives(n):
        fixed = fixed_indices(poset, lambda x, s=sigma: cast(KChainPP, x).act(s))
        chains = sum(1 for i in fixed if i in primes)
        words = fixed_prime_word_count(k, sigma)
        formula = character_eval("park_prime_k", n, k, sigma)
        rows.append(
            {
                "cycle_type": "".join(str(c) for c in sigma.cycle_type()),
                "chains": chains,
                "words": words,
                "formula": formula,
                "match": chains == words == formula,
            }
        )
    return rows


@cache
def pp_k_order_complex(n: int, k: int) -> ChainComplex:
    """Order complex of the k-divisible parking poset minus its bottom.

    Raises:
        GuardExceededError: If n exceeds the homology guard
    """
    check_guard("n", n, MAX_K_HOMOLOGY_N)
    return order_complex(build_pp_k(n, k))


def kdivisible_character(n: int, k: int, sigma: Permutation) -> int:
    """Trace of sigma on the top homology of the k-divisible parking poset.

    Raises:
        HomologyError: If the homology is not concentrated
    """
    poset = build_pp_k(n, k)
    fixed = fixed_indices(poset, lambda x: cast(KChainPP, x).act(sigma))
    return hopf_character(poset, pp_k_order_complex(n, k), fixed)


def kdivisible_character_table(n: int, k: int) -> list[dict[str, Any]]:
    """Rows (cycle_type, lefschetz, formula, sign_park_prime_k, match).

    formula is (-1)^(n - z) (kn - 1)^(z - 1); sign_park_prime_k multiplies
    the sign by the fixed-point count of prime k-multichains.
    """
    rows: list[dict[str, Any]] = []
    for sigma in cycle_type_representatives(n):
        sign = (-1) ** (n - sigma.cycle_count())
        lefschetz = kdivisible_character(n, k, sigma)
        formula = sign * character_eval("park_prime_k", n, k, sigma)
        twisted = sign * character_oracle("park_prime_k", n, k, sigma)
        rows.append(
            {
                "cycle_type": "".join(str(c) for c in sigma.cycle_type()),
                "lefschetz": lefschetz,
                "formula": formula,
                "sign_park_prime_k": twisted,
                "match": lefschetz == formula == twisted,
            }
        )
    return rows


class KDivisibleReport(BaseModel):
    """Counts and identities for NC_n^(k) and its parking version."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    nc_elements: int
    nc_expected: int
    pp_elements: int
    pp_expected: int
    nc_rank_ok: bool
    pp_rank_ok: bool
    descent_unique: bool
    multichain_identities: bool
    primes: int
    primes_expected: int
    prime_characters_ok: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Every count matches and every identity holds."""
        return (
            self.nc_elements == self.nc_expected
            and self.pp_elements == self.pp_expected
            and self.nc_rank_ok
            and self.pp_rank_ok
            and self.descent_unique
            and self.multichain_identities
            and self.primes == self.primes_expected
            and self.prime_characters_ok
        )


def verify_kdivisible(n: int, k: int, max_j: int = 2) -> KDivisibleReport:
    """Build both k-divisible posets and check their counts and identities.

    Raises:
        GuardExceededError: If n or k exceeds its guard
    """
    nck = build_nc_k(n, k)
    ppk = build_pp_k(n, k)
    identities = all(
        nc_multichain_identity(n, k, j) and pp_multichain_identity(n, k, j)
        for j in range(1, max_j + 1)
    )
    report = KDivisibleReport(
        n=n,
        k=k,
        nc_elements=len(nck),
        nc_expected=fuss_catalan(n, k + 1),
        pp_elements=len(ppk),
        pp_expected=zeta_closed(n, k),
        nc_rank_ok=rank_matches_hasse(nck),
        pp_rank_ok=rank_matches_hasse(ppk),
        descent_unique=descent_is_unique(n, k),
        multichain_identities=identities,
        primes=len(k_prime_filter(ppk)),
        primes_expected=(k * n - 1) ** (n - 1),
        prime_characters_ok=all(row["match"] for row in k_prime_table(n, k)),
    )
    logger.info("k-divisible check n=%d k=%d: passed=%s", n, k, report.passed)
    return report
