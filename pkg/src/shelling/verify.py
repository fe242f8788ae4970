"""Exhaustive verification of the shelling and of the lemmas behind it.

Every check returns a pydantic report. A failed check is a report with a
counterexample, never an exception.
"""

import logging
from collections.abc import Callable, Iterator
from functools import cache
from typing import cast

import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, Field, computed_field

from src.config import LOGGER_NAME, MAX_LONG_SHELLING_N, MAX_NC_POSET_N, MAX_SHELLING_N, check_guard
from src.nc.partitions import NoncrossingPartition, el_label
from src.nc.permutations import Permutation
from src.parking.objects import NC2Pair
from src.poset.finite import maximal_chains
from src.poset.parking_poset import nc_poset, pp_leq, pp_rank, pp_upper_covers
from src.shelling.order import (
    ChainOrder,
    ShellingOrderError,
    code,
    cover_order,
    m_value,
    p0,
    p0_from_eta,
    split_block,
)

logger = logging.getLogger(LOGGER_NAME)


class ShellingReport(BaseModel):
    """Outcome of the shelling check over all ordered pairs of maximal chains."""

    n: int
    chains: int
    pairs_checked: int = 0
    witnessed: int = 0
    counterexample: list[str] | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.witnessed == self.pairs_checked


class KeyLemmaReport(BaseModel):
    """Outcome of the exchange lemma over all quadruples x, y, y', z."""

    n: int
    quadruples: int = 0
    lower_branch: int = Field(0, description="Resolved by some y'' below z")
    upper_branch: int = Field(0, description="Resolved only by some z' above y")
    counterexample: list[str] | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.counterexample is None


class LemmaReport(BaseModel):
    """One lemma checked over its full quantifier range."""

    name: str
    domain_size: int = 0
    passed_count: int = 0
    first_counterexample: str | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.passed_count == self.domain_size


class SupportReport(BaseModel):
    """Per-lemma results for one n."""

    n: int
    lemmas: list[LemmaReport]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(lemma.passed for lemma in self.lemmas)


class ElLabelingReport(BaseModel):
    """Checks of the edge labeling of NC_n."""

    n: int
    intervals: int = 0
    unique_increasing: int = 0
    distinct_labels: bool = True
    counterexample: str | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.distinct_labels and self.unique_increasing == self.intervals


class RemarkReport(BaseModel):
    """The four-element configuration on six points, with its three checks."""

    elements: dict[str, str]
    y_minimal_below_z: bool
    z_before_z_prime: bool
    y_prime_before_y: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.y_minimal_below_z and self.z_before_z_prime and self.y_prime_before_y


def _describe(order: ChainOrder, chain: tuple[int, ...]) -> list[str]:
    return [str(order.poset.elements[i]) for i in chain]


def replaceable_ranks(order: ChainOrder, chain: tuple[int, ...]) -> list[int]:
    """Ranks r where p_r is not the first cover of p_{r-1} lying below p_{r+1}."""
    leq = order.poset.leq
    ranks = []
    for r in range(1, len(chain) - 1):
        below = [q for q in order.order(chain[r - 1]) if leq[q, chain[r + 1]]]
        if below[0] != chain[r]:
            ranks.append(r)
    return ranks


def verify_shelling(n: int, long: bool = False) -> ShellingReport:
    """Check the shelling condition for every ordered pair p' < p of maximal chains.

    A pair passes when some p'' < p meets p in all but one element and
    contains p' ∩ p. Such a p'' exists exactly when p' leaves p at a rank r
    where p_r can be swapped for an earlier cover; the swapped chain is the
    witness.

    Args:
        n: Ground-set size
        long: Allow n = MAX_LONG_SHELLING_N

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_LONG_SHELLING_N if long else MAX_SHELLING_N)
    order = ChainOrder(n)
    chains = order.chains
    report = ShellingReport(n=n, chains=len(chains))
    matrix = np.array(chains, dtype=np.int64)
    for b in range(1, len(chains)):
        ranks = replaceable_ranks(order, chains[b])
        report.pairs_checked += b
        if ranks:
            agree = (matrix[:b][:, ranks] == matrix[b, ranks]).all(axis=1)
        else:
            agree = np.ones(b, dtype=bool)
        failures = int(agree.sum())
        report.witnessed += b - failures
        if failures and report.counterexample is None:
            a = int(np.argmax(agree))
            report.counterexample = [
                *_describe(order, chains[a]), "before", *_describe(order, chains[b])
            ]
            logger.warning("Shelling fails at n=%d for chains %d < %d", n, a, b)
    logger.info(
        "Shelling n=%d: %d chains, %d/%d pairs witnessed",
        n, report.chains, report.witnessed, report.pairs_checked,
    )
    return report


@cache
def _chain_order(n: int) -> ChainOrder:
    return ChainOrder(n)


def _key_lemma_rows(n: int, xs: list[int]) -> tuple[int, int, int, list[str] | None]:
    """Key lemma over the quadruples whose bottom lies in xs."""
    order = _chain_order(n)
    poset = order.poset
    leq = poset.leq
    total = lower = upper = 0
    failure: list[str] | None = None
    for x in xs:
        ups = [y for y in order.order(x) if not order.is_top(y)]
        for y in ups:
            earlier = [y2 for y2 in ups if order.precedes(x, y2, y)]
            for z in (z for z in order.order(y) if not order.is_top(z)):
                for y2 in earlier:
                    total += 1
                    if any(leq[y3, z] for y3 in earlier):
                        lower += 1
                        continue
                    bound = poset.join(y2, z)
                    if bound is not None and any(
                        leq[z2, bound] and order.precedes(y, z2, z) for z2 in order.order(y)
                    ):
                        upper += 1
                    elif failure is None:
                        failure = [str(poset.elements[i]) for i in (x, y, y2, z)]
    return total, lower, upper, failure


def verify_key_lemma(n: int, jobs: int = 1) -> KeyLemmaReport:
    """Check, for every x < y < z (covers) and cover y' of x with y' before y,
    that some y'' before y covers x and lies under z, or that some cover z'
    of y lies under y' v z and comes before z.

    Args:
        n: Ground-set size
        jobs: Worker processes; per-worker counts are summed

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_SHELLING_N)
    order = _chain_order(n)
    xs = [i for i in range(len(order.poset)) if not order.is_top(i)]
    chunks = [xs[i::jobs] for i in range(jobs)] if jobs > 1 else [xs]
    rows = Parallel(n_jobs=jobs)(delayed(_key_lemma_rows)(n, chunk) for chunk in chunks)
    report = KeyLemmaReport(n=n)
    for total, lower, upper, failure in rows:
        report.quadruples += total
        report.lower_branch += lower
        report.upper_branch += upper
        if failure is not None and report.counterexample is None:
            report.counterexample = failure
    if report.counterexample is not None:
        logger.warning("Key lemma fails at n=%d: %s", n, report.counterexample)
    return report


class _Lemma:
    """Accumulates one LemmaReport."""

    def __init__(self, name: str) -> None:
        self.report = LemmaReport(name=name)

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.report.domain_size += 1
        if ok:
            self.report.passed_count += 1
        elif self.report.first_counterexample is None:
            self.report.first_counterexample = describe()


def _covers(order: ChainOrder, i: int) -> list[int]:
    return [j for j in order.order(i) if not order.is_top(j)]


def _cover_pairs(order: ChainOrder, indices: list[int]) -> Iterator[tuple[int, int, int]]:
    for x in indices:
        ups = _covers(order, x)
        for a, y in enumerate(ups):
            for y2 in ups[a + 1:]:
                yield x, y, y2


def _finite_join(order: ChainOrder, a: int, b: int) -> int | None:
    """Join of a and b, or None when it is TOP."""
    j = order.poset.join(a, b)
    return None if j is None or order.is_top(j) else j


def verify_support_lemmas(n: int) -> SupportReport:
    """Check every supporting lemma exhaustively on the parking poset.

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_SHELLING_N)
    order = _chain_order(n)
    poset = order.poset
    leq = poset.leq
    indices = [i for i in range(len(poset)) if not order.is_top(i)]
    gamma = {i: code(order.element(i)) for i in indices}
    zeros = {i: p0(order.element(i)) for i in indices}

    @cache
    def m(i: int, j: int) -> int:
        return m_value(order.element(i), order.element(j))

    @cache
    def block(i: int, j: int) -> tuple[int, ...]:
        return split_block(order.element(i), order.element(j))

    def show(*ids: int) -> str:
        return " ; ".join(str(poset.elements[i]) for i in ids)

    monotone = _Lemma("code_monotone")
    equal_join = _Lemma("equal_code_join")
    p0_join = _Lemma("p0_join")
    for a in indices:
        for b in indices:
            if a != b and leq[a, b]:
                monotone.check(gamma[a] <= gamma[b], lambda a=a, b=b: show(a, b))
            if a >= b:
                continue
            j = _finite_join(order, a, b)
            if gamma[a] == gamma[b]:
                equal_join.check(
                    j is not None and gamma[j] == gamma[a], lambda a=a, b=b: show(a, b)
                )
            if j is not None:
                p0_join.check(
                    zeros[j] == min(zeros[a], zeros[b]), lambda a=a, b=b: show(a, b)
                )

    p0_eta = _Lemma("p0_eta")
    for i in indices:
        p0_eta.check(zeros[i] == p0_from_eta(order.element(i)), lambda i=i: show(i))

    diamond = _Lemma("diamond")
    bounded = _Lemma("bounded_m")
    compat = _Lemma("m_gamma_compat")
    for x, y, y2 in _cover_pairs(order, indices):
        m1, m2 = m(x, y), m(x, y2)
        if m1 != m2:
            compat.check((m1 < m2) == (gamma[y] < gamma[y2]), lambda t=(x, y, y2): show(*t))
        j = _finite_join(order, y, y2)
        if block(x, y) != block(x, y2):
            ok = (
                j is not None
                and poset.ranks[j] == poset.ranks[x] + 2
                and set(np.nonzero(leq[x] & leq[:, j])[0]) - {x, j} == {y, y2}
                and m1 == m(y2, j)
                and m2 == m(y, j)
                and (m1 != m2 or m1 == 0)
            )
            diamond.check(ok, lambda t=(x, y, y2): show(*t))
        elif j is not None:
            top_m = max(m1, m2)
            inside = [u for u in indices if leq[x, u] and leq[u, j]]
            ok = all(
                m(u, v) <= top_m for u in inside for v in _covers(order, u) if leq[v, j]
            )
            bounded.check(ok, lambda t=(x, y, y2): show(*t))

    increasing = _Lemma("increasing_m")
    for phi in indices:
        for chi in _covers(order, phi):
            for psi in _covers(order, chi):
                earlier = any(
                    order.precedes(phi, c, chi) and leq[c, psi] for c in _covers(order, phi)
                )
                if not earlier:
                    increasing.check(
                        m(phi, chi) <= m(chi, psi), lambda t=(phi, chi, psi): show(*t)
                    )

    lemmas = [monotone, equal_join, p0_join, p0_eta, diamond, bounded, increasing, compat]
    report = SupportReport(n=n, lemmas=[lemma.report for lemma in lemmas])
    for lemma in report.lemmas:
        logger.info("%s n=%d: %d/%d", lemma.name, n, lemma.passed_count, lemma.domain_size)
    return report


def _is_increasing(labels: list[tuple[int, int]]) -> bool:
    return all(a < b for a, b in zip(labels, labels[1:], strict=False))


def verify_el_labeling(n: int) -> ElLabelingReport:
    """Check that every interval of NC_n has a unique increasing maximal chain,
    that it is lexicographically first, and that distinct covers get distinct labels.

    Raises:
        GuardExceededError: If n exceeds the guard
    """
    check_guard("n", n, MAX_NC_POSET_N)
    poset = nc_poset(n)
    parts = cast(tuple[NoncrossingPartition, ...], poset.elements)
    report = ElLabelingReport(n=n)
    for x in range(len(poset)):
        labels = [el_label(parts[x], parts[y]) for y in poset.upper_covers(x)]
        if len(set(labels)) != len(labels):
            report.distinct_labels = False
            report.counterexample = report.counterexample or f"covers of {parts[x]}"
        for y in range(len(poset)):
            if x == y or not poset.leq[x, y]:
                continue
            report.intervals += 1
            interval = poset.interval(x, y)
            members = cast(tuple[NoncrossingPartition, ...], interval.elements)
            words = sorted(
                [
                    el_label(members[a], members[b])
                    for a, b in zip(chain, chain[1:], strict=False)
                ]
                for chain in maximal_chains(interval)
            )
            rising = [w for w in words if _is_increasing(w)]
            if len(rising) == 1 and rising[0] == words[0]:
                report.unique_increasing += 1
            elif report.counterexample is None:
                report.counterexample = f"[{parts[x]}, {parts[y]}]"
    return report


def _pair(blocks: list[tuple[int, ...]], sigma: tuple[int, ...]) -> NC2Pair:
    pi = NoncrossingPartition.from_blocks(len(sigma), blocks)
    return NC2Pair(pi=pi, sigma=Permutation(word=sigma))


def recursive_atom_counterexample() -> RemarkReport:
    """Rebuild the six-point configuration showing that the cover order is not a
    recursive atom ordering.

    x is the bottom; y < z, y < z' and y' < z' are covers. y is the first
    cover of x below z, z comes before z' among the covers of y, and y' comes
    before y among the covers of x.

    Raises:
        ShellingOrderError: If any of the three checks fails
    """
    x = _pair([(1, 2, 3, 4, 5, 6)], (1, 2, 3, 4, 5, 6))
    y = _pair([(1, 2, 3), (4, 5, 6)], (1, 2, 4, 3, 5, 6))
    z = _pair([(1, 3), (2,), (4, 5, 6)], (1, 4, 2, 3, 5, 6))
    y2 = _pair([(1, 4, 5, 6), (2, 3)], (3, 1, 2, 4, 5, 6))
    z2 = _pair([(1,), (2, 3), (4, 5, 6)], (4, 1, 2, 3, 5, 6))
    for lower, upper in ((x, y), (x, y2), (y, z), (y, z2), (y2, z2)):
        if pp_rank(upper) != pp_rank(lower) + 1 or not pp_leq(lower, upper):
            raise ShellingOrderError(f"{lower} < {upper} is not a cover")
    at_x = cover_order(x)
    below_z = [c for c in pp_upper_covers(x) if pp_leq(c, z)]
    report = RemarkReport(
        elements={"x": str(x), "y": str(y), "z": str(z), "y'": str(y2), "z'": str(z2)},
        y_minimal_below_z=min(below_z, key=at_x.index) == y,
        z_before_z_prime=cover_order(y).index(z) < cover_order(y).index(z2),
        y_prime_before_y=at_x.index(y2) < at_x.index(y),
    )
    if not report.passed:
        logger.error("Cover order drifted on the six-point configuration: %s", report)
        raise ShellingOrderError("Six-point configuration no longer reproduces")
    return report

