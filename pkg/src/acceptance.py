"""The full verification sweep behind `verify-all`.

Each check is a module-level function returning (value, expected); the check
passes when the two are equal. Checks are independent, so they can be spread
over worker processes and still come back in plan order.
"""

import logging
from collections.abc import Callable
from itertools import product
from math import factorial
from typing import Any

from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict

from src.config import LOGGER_NAME, MAX_LONG_SHELLING_N, MAX_PARKING_ENUM_N, MAX_SHELLING_N, REPRESENTATIONS
from src.enumeration import (
    character_eval,
    character_table,
    chain_to_ktree,
    code_to_ktree,
    count_table,
    dimension_identity_check,
    enumerate_ktrees,
    ktree_code,
    ktree_to_chain,
    mobius_closed,
    mobius_oracle,
    verify_series,
    whitney_first_closed,
    whitney_first_oracle,
    whitney_second_closed,
    zeta_closed,
)
from src.kdivisible import (
    KChainPP,
    build_pp_k,
    edelman_agreement,
    kdivisible_character_table,
    pp_k_order_complex,
    verify_kdivisible,
)
from src.nc.numbers import catalan, stirling2
from src.nc.permutations import all_permutations, cycle_type_representatives
from src.parking import act, convert, enumerate_parking, enumerate_parking_words, orbit_count
from src.poset.parking_poset import action_preserves_order, build_pp_poset
from src.poset.permutahedron import is_isomorphism, permutahedron_face_poset, right_comb_subposet
from src.shelling import (
    recursive_atom_counterexample,
    verify_el_labeling,
    verify_key_lemma,
    verify_shelling,
    verify_support_lemmas,
)
from src.topology import (
    boundary_forests,
    facets,
    fiber_identity_holds,
    forest_complex,
    forest_whitney_relation_holds,
    is_cone,
    lefschetz_character,
    pp_order_complex,
    right_branch_check,
    verify_cluster,
    whitney_alternating_sum,
)

logger = logging.getLogger(LOGGER_NAME)

Check = tuple[str, Callable[..., tuple[Any, Any]], tuple[int, ...]]


class CheckResult(BaseModel):
    """One line of the verification sweep."""

    model_config = ConfigDict(frozen=True)

    name: str
    value: str
    expected: str
    passed: bool


def _cardinality(m: int) -> tuple[Any, Any]:
    pairs = enumerate_parking(m)
    sizes = (
        len(pairs),
        len({convert(p, "triple") for p in pairs}),
        len(enumerate_parking_words(m)),
        len({convert(p, "tree") for p in pairs}),
    )
    return sizes, ((m + 1) ** (m - 1),) * 4


def _round_trips(m: int) -> tuple[Any, Any]:
    ok = all(
        convert(convert(p, r), "pair") == p for p in enumerate_parking(m) for r in REPRESENTATIONS
    )
    return ok, True


def _whitney_second(m: int) -> tuple[Any, Any]:
    return build_pp_poset(m).rank_sizes(), tuple(whitney_second_closed(m, ell) for ell in range(m))


def _chain_formula(m: int, k: int) -> tuple[Any, Any]:
    rows = count_table(m, k)
    return [r["oracle"] for r in rows], [r["closed"] for r in rows]


def _whitney_first(m: int) -> tuple[Any, Any]:
    return whitney_first_oracle(m), [whitney_first_closed(m, ell) for ell in range(m)]


def _mobius(m: int) -> tuple[Any, Any]:
    return mobius_oracle(m), mobius_closed(m)


def _shelling(m: int) -> tuple[Any, Any]:
    report = verify_shelling(m, long=m > MAX_SHELLING_N)
    return (report.chains, report.passed), (m ** (m - 2) * factorial(m), True)


def _key_lemma(m: int) -> tuple[Any, Any]:
    return verify_key_lemma(m).passed, True


def _support_lemmas(m: int) -> tuple[Any, Any]:
    return verify_support_lemmas(m).passed, True


def _el_labeling(m: int) -> tuple[Any, Any]:
    return verify_el_labeling(m).passed, True


def _remark() -> tuple[Any, Any]:
    return recursive_atom_counterexample().passed, True


def _homology(m: int) -> tuple[Any, Any]:
    ranks = pp_order_complex(m).homology_ranks()
    expected = {d: ((m - 1) ** (m - 1) if d == m - 2 else 0) for d in ranks}
    return ranks, expected


def _lefschetz(m: int) -> tuple[Any, Any]:
    sigmas = cycle_type_representatives(m)
    return (
        [lefschetz_character(m, s) for s in sigmas],
        [character_eval("sign_park_prime", m, 1, s) for s in sigmas],
    )


def _characters(m: int, k: int) -> tuple[Any, Any]:
    return all(row["match"] for row in character_table(m, k)), True


def _series(k: int) -> tuple[Any, Any]:
    return verify_series(k, 6).passed, True


def _ktree_codes(m: int, k: int) -> tuple[Any, Any]:
    trees = enumerate_ktrees(m, k)
    ok = all(code_to_ktree(ktree_code(t)) == t for t in trees)
    return (len(trees), ok), (zeta_closed(m, k), True)


def _ktree_chains(m: int, k: int) -> tuple[Any, Any]:
    chains = [x.multichain() for x in build_pp_k(m, k).elements if isinstance(x, KChainPP)]
    trees = [chain_to_ktree(c) for c in chains]
    ok = all(ktree_to_chain(t) == c for t, c in zip(trees, chains, strict=True))
    return (len(set(trees)), ok), (zeta_closed(m, k), True)


def _ktree_equivariance(m: int, k: int) -> tuple[Any, Any]:
    ok = all(
        chain_to_ktree([act(s, x) for x in ktree_to_chain(t)]) == act(s, t)
        for s, t in product(all_permutations(m), enumerate_ktrees(m, k))
    )
    return ok, True


def _facets(m: int) -> tuple[Any, Any]:
    return len(facets(m)), catalan(m - 1)


def _fibers(m: int) -> tuple[Any, Any]:
    return fiber_identity_holds(m), True


def _forest_whitney(m: int) -> tuple[Any, Any]:
    return forest_whitney_relation_holds(m), True


def _boundary_sphere(m: int) -> tuple[Any, Any]:
    ranks = forest_complex(boundary_forests(m), name=f"dDelta_{m}").homology_ranks()
    return ranks, {d: int(d == m - 3) for d in ranks}


def _cone(m: int) -> tuple[Any, Any]:
    return is_cone(m), True


def _right_branch(m: int) -> tuple[Any, Any]:
    return right_branch_check(m), True


def _cluster(m: int) -> tuple[Any, Any]:
    return verify_cluster(m).passed, True


def _orbits(m: int) -> tuple[Any, Any]:
    return orbit_count(m), catalan(m)


def _action(m: int) -> tuple[Any, Any]:
    return action_preserves_order(m), True


def _whitney_modules(m: int) -> tuple[Any, Any]:
    return whitney_alternating_sum(m), (m - 1) ** (m - 1)


def _dimension_identity(m: int, k: int) -> tuple[Any, Any]:
    return dimension_identity_check(m, k), True


def _kdivisible(m: int, k: int) -> tuple[Any, Any]:
    return verify_kdivisible(m, k).passed, True


def _edelman(m: int, k: int) -> tuple[Any, Any]:
    return edelman_agreement(m, k), True


def _kdivisible_homology(m: int, k: int) -> tuple[Any, Any]:
    ranks = pp_k_order_complex(m, k).homology_ranks()
    expected = {d: ((k * m - 1) ** (m - 1) if d == m - 2 else 0) for d in ranks}
    return ranks, expected


def _kdivisible_characters(m: int, k: int) -> tuple[Any, Any]:
    return all(row["match"] for row in kdivisible_character_table(m, k)), True


def _permutahedron(m: int) -> tuple[Any, Any]:
    face = permutahedron_face_poset(m)
    combs, witness = right_comb_subposet(m)
    fubini = sum(factorial(j) * stirling2(m, j) for j in range(1, m + 1))
    return (len(face), is_isomorphism(face, combs, witness)), (fubini, True)


def acceptance_plan(n: int, long: bool = False) -> list[Check]:
    """Every check run by verify-all for ground sets up to n."""
    small = range(2, min(n, 4) + 1)
    shelling_limit = MAX_LONG_SHELLING_N if long else MAX_SHELLING_N
    plan: list[Check] = []
    for m in range(2, min(n + 2, MAX_PARKING_ENUM_N) + 1):
        plan.append((f"cardinality n={m}", _cardinality, (m,)))
    for m in small:
        plan.append((f"round trips n={m}", _round_trips, (m,)))
        plan.append((f"orbits n={m}", _orbits, (m,)))
        plan.append((f"action preserves order n={m}", _action, (m,)))
    for m in range(2, min(n + 1, 5) + 1):
        plan.append((f"whitney second n={m}", _whitney_second, (m,)))
        plan.append((f"whitney first n={m}", _whitney_first, (m,)))
        plan.append((f"mobius n={m}", _mobius, (m,)))
        plan.append((f"whitney modules n={m}", _whitney_modules, (m,)))
    for m, k in product(small, range(1, 4)):
        plan.append((f"chain formula n={m} k={k}", _chain_formula, (m, k)))
        plan.append((f"dimension identity n={m} k={k}", _dimension_identity, (m, k)))
        plan.append((f"characters n={m} k={k}", _characters, (m, k)))
        plan.append((f"k-divisible n={m} k={k}", _kdivisible, (m, k)))
    for m in range(2, min(n, shelling_limit) + 1):
        plan.append((f"shelling n={m}", _shelling, (m,)))
    for m in small:
        plan.append((f"key lemma n={m}", _key_lemma, (m,)))
        plan.append((f"support lemmas n={m}", _support_lemmas, (m,)))
        plan.append((f"el labeling n={m}", _el_labeling, (m,)))
    plan.append(("recursive atom counterexample", _remark, ()))
    for m in range(3, min(n, 5 if long else 4) + 1):
        plan.append((f"homology n={m}", _homology, (m,)))
        plan.append((f"lefschetz n={m}", _lefschetz, (m,)))
    for k in range(1, 4):
        plan.append((f"series k={k}", _series, (k,)))
    plan.append(("k-tree codes n=3 k=2", _ktree_codes, (3, 2)))
    plan.append(("k-tree chains n=3 k=2", _ktree_chains, (3, 2)))
    plan.append(("k-tree equivariance n=3 k=2", _ktree_equivariance, (3, 2)))
    for m in range(2, min(n + 3, 7) + 1):
        plan.append((f"facets n={m}", _facets, (m,)))
        plan.append((f"right branches n={m}", _right_branch, (m,)))
    for m in range(2, min(n + 1, 5) + 1):
        plan.append((f"fibers n={m}", _fibers, (m,)))
        plan.append((f"forest whitney n={m}", _forest_whitney, (m,)))
    for m in range(3, min(n + 1, 6) + 1):
        plan.append((f"boundary sphere n={m}", _boundary_sphere, (m,)))
        plan.append((f"cone n={m}", _cone, (m,)))
    for m in range(3, min(n, 4) + 1):
        plan.append((f"cluster n={m}", _cluster, (m,)))
    for m, k in ((2, 2), (3, 2), (2, 3)):
        plan.append((f"edelman n={m} k={k}", _edelman, (m, k)))
    if n >= 3:
        for k in (2, 3):
            plan.append((f"k-divisible homology n=3 k={k}", _kdivisible_homology, (3, k)))
            plan.append((f"k-divisible characters n=3 k={k}", _kdivisible_characters, (3, k)))
    for m in range(2, min(n, 4) + 1):
        plan.append((f"permutahedron n={m}", _permutahedron, (m,)))
    return plan


def run_check(name: str, func: Callable[..., tuple[Any, Any]], args: tuple[int, ...]) -> CheckResult:
    """Run one check; an exception is reported as a failure."""
    try:
        value, expected = func(*args)
    except Exception as e:
        logger.error("Check %s raised: %s", name, e)
        return CheckResult(name=name, value=f"error: {e}", expected="", passed=False)
    passed = value == expected
    if not passed:
        logger.warning("Check %s failed: %s != %s", name, value, expected)
    return CheckResult(name=name, value=str(value), expected=str(expected), passed=passed)


def run_acceptance(n: int, jobs: int = 1, long: bool = False) -> list[CheckResult]:
    """Run the whole plan, in plan order.

    Args:
        n: Largest ground set of the size-dependent checks
        jobs: Worker processes for independent checks
        long: Unlock the n = 5 shelling and homology runs
    """
    plan = acceptance_plan(n, long=long)
    logger.info("Running %d checks with %d worker(s)", len(plan), jobs)
    results: list[CheckResult] = Parallel(n_jobs=jobs)(
        delayed(run_check)(name, func, args) for name, func, args in plan
    )
    failed = [r.name for r in results if not r.passed]
    logger.info("%d of %d checks passed", len(results) - len(failed), len(results))
    return results
