"""Command-line front end.

Usage:
    parking-poset count --n 3 --k 1
    parking-poset convert --from word --to tree --input 1325271
    parking-poset homology --n 3 --character
    parking-poset verify-all --n 3 --jobs 4

Exit status is 0 when every requested check passes, 1 when one fails and 2
on bad arguments.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import pandas as pd
from pydantic import ValidationError

from src.acceptance import run_acceptance
from src.config import LOGGER_NAME, OUTPUT_FORMATS, REPRESENTATIONS, GuardExceededError, setup_logging
from src.enumeration import (
    chain_count_closed,
    chain_counts_oracle,
    chain_series,
    character_eval,
    character_table,
    mobius_closed,
    mobius_oracle,
    series_counts,
    verify_series,
    whitney_first_closed,
    whitney_first_oracle,
    whitney_second_closed,
    zeta_closed,
)
from src.kdivisible import (
    build_pp_k,
    edelman_agreement,
    k_prime_table,
    kdivisible_character_table,
    verify_kdivisible,
)
from src.models.commands import Command, ConvertCommand
from src.nc.permutations import cycle_type_representatives
from src.parking import AnyParking, ConversionError, KParkingWord, convert
from src.poset.export import to_dot, to_frame, to_json
from src.poset.finite import zeta_count
from src.poset.parking_poset import build_pp_poset
from src.shelling import (
    recursive_atom_counterexample,
    verify_el_labeling,
    verify_key_lemma,
    verify_shelling,
    verify_support_lemmas,
)
from src.topology import (
    fiber_identity_holds,
    forest_whitney,
    forest_whitney_relation_holds,
    homology_table,
    lefschetz_character,
    pp_order_complex,
    verify_cluster,
)
from src.validation.inputs import parse_object

logger = logging.getLogger(LOGGER_NAME)

Outcome = tuple[str, bool]


def _csv(rows: list[dict[str, Any]]) -> str:
    return str(pd.DataFrame(rows).to_csv(index=False, lineterminator="\n"))


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"


def _rows_or_json(rows: list[dict[str, Any]], fmt: str, payload: Any = None) -> str:
    if fmt == "json":
        return _json(rows if payload is None else payload)
    return _csv(rows)


def encode_object(x: AnyParking) -> dict[str, Any]:
    """JSON form of a parking object; words as {"n", "k", "word"}."""
    if isinstance(x, KParkingWord):
        return {"n": x.n, "k": x.k, "word": list(x.word)}
    return dict(x.to_json())


def run_convert(cmd: ConvertCommand) -> Outcome:
    """Parse the input in one representation and print it in another."""
    source = parse_object(cmd.text, cmd.source, cmd.k)
    result = convert(source, cmd.target)
    return _json(encode_object(result)), True


def run_poset(cmd: Command) -> Outcome:
    """Build the parking poset and export it."""
    poset = build_pp_poset(cmd.n)
    if cmd.output_format == "dot":
        return to_dot(poset), True
    if cmd.output_format == "json":
        return _json(to_json(poset, n=cmd.n)), True
    return str(to_frame(poset).to_csv(index=False, lineterminator="\n")), True


def _count_rows(cmd: Command, table: str) -> tuple[list[dict[str, Any]], bool]:
    n, k = cmd.n, cmd.k
    ells = range(n) if cmd.ell is None else [cmd.ell]
    if table == "chains":
        oracle = chain_counts_oracle(n, k)
        rows = [{"ell": ell, "count": oracle.get(ell, 0)} for ell in ells]
        return rows, all(r["count"] == chain_count_closed(n, k, r["ell"]) for r in rows)
    if table == "whitney":
        first = whitney_first_oracle(n)
        sizes = build_pp_poset(n).rank_sizes()
        rows = [{"ell": ell, "first": first[ell], "second": sizes[ell]} for ell in ells]
        ok = all(
            r["first"] == whitney_first_closed(n, r["ell"])
            and r["second"] == whitney_second_closed(n, r["ell"])
            for r in rows
        )
        return rows, ok
    if table == "zeta":
        poset = build_pp_poset(n)
        rows = [
            {"k": j, "count": zeta_count(poset, j), "closed": zeta_closed(n, j)}
            for j in range(1, k + 1)
        ]
        return rows, all(r["count"] == r["closed"] for r in rows)
    value = mobius_oracle(n)
    return [{"n": n, "mobius": value, "closed": mobius_closed(n)}], value == mobius_closed(n)


def run_count(cmd: Command, table: str) -> Outcome:
    """Chain, Whitney, zeta or Mobius table, checked against the closed forms."""
    rows, ok = _count_rows(cmd, table)
    return _rows_or_json(rows, cmd.output_format), ok


def run_shelling(cmd: Command) -> Outcome:
    """Shelling, key lemma, support lemmas, edge labeling and the atom-order configuration."""
    reports: dict[str, Any] = {"shelling": verify_shelling(cmd.n, long=cmd.long)}
    if cmd.n <= 4:
        reports["key_lemma"] = verify_key_lemma(cmd.n, jobs=cmd.jobs)
        reports["support_lemmas"] = verify_support_lemmas(cmd.n)
    else:
        logger.info("Lemma checks stop at n=4; running the shelling check only")
    reports["el_labeling"] = verify_el_labeling(cmd.n)
    reports["recursive_atom_counterexample"] = recursive_atom_counterexample()
    rows = [{"check": name, "passed": report.passed} for name, report in reports.items()]
    payload = {name: report.model_dump() for name, report in reports.items()}
    return _rows_or_json(rows, cmd.output_format, payload), all(r["passed"] for r in rows)


def run_homology(cmd: Command, character: bool) -> Outcome:
    """Reduced Betti numbers of the proper part, or the character on its top homology."""
    n = cmd.n
    complex_ = pp_order_complex(n)
    if character:
        rows = []
        for sigma in cycle_type_representatives(n):
            value = lefschetz_character(n, sigma)
            formula = character_eval("sign_park_prime", n, 1, sigma)
            rows.append(
                {
                    "cycle_type": "".join(str(c) for c in sigma.cycle_type()),
                    "lefschetz": value,
                    "formula": formula,
                    "match": value == formula,
                }
            )
        return _rows_or_json(rows, cmd.output_format), all(r["match"] for r in rows)
    rows = homology_table(complex_)
    expected = (n - 1) ** (n - 1)
    ok = all(r["rank"] == (expected if r["degree"] == n - 2 else 0) for r in rows)
    return _rows_or_json(rows, cmd.output_format), ok


def run_cluster(cmd: Command) -> Outcome:
    """Cluster poset checks and the Whitney numbers of the forest complex."""
    n = cmd.n
    report = verify_cluster(n)
    forests = forest_whitney(n)
    rows = [
        {
            "ell": ell,
            "cluster": report.whitney[ell],
            "signed_whitney_first": report.signed_whitney_first[ell],
            "forests": forests[ell],
        }
        for ell in range(n)
    ]
    ok = report.passed and forest_whitney_relation_holds(n) and fiber_identity_holds(n)
    payload = {"cluster": report.model_dump(), "forest_whitney": forests}
    return _rows_or_json(rows, cmd.output_format, payload), ok


def run_kdivisible(cmd: Command, table: str) -> Outcome:
    """Counts, prime characters or homology characters of the k-divisible posets."""
    n, k = cmd.n, cmd.k
    if cmd.output_format == "dot":
        return to_dot(build_pp_k(n, k), label=str), True
    if table == "primes":
        rows = k_prime_table(n, k)
        return _rows_or_json(rows, cmd.output_format), all(r["match"] for r in rows)
    if table == "characters":
        rows = kdivisible_character_table(n, k)
        return _rows_or_json(rows, cmd.output_format), all(r["match"] for r in rows)
    report = verify_kdivisible(n, k)
    rows = [{"check": key, "value": value} for key, value in report.model_dump().items()]
    ok = report.passed
    if k * n <= 8:
        agreement = edelman_agreement(n, k)
        rows.append({"check": "edelman_agreement", "value": agreement})
        ok = ok and agreement
    return _rows_or_json(rows, cmd.output_format, report.model_dump()), ok


def run_character_table(cmd: Command) -> Outcome:
    """Closed forms against fixed-point counts for every cycle type."""
    rows = character_table(cmd.n, cmd.k)
    return _rows_or_json(rows, cmd.output_format), all(r["match"] for r in rows)


def run_series(cmd: Command) -> Outcome:
    """Coefficients n! [x^n t^ell] of the chain series up to order n."""
    counts = series_counts(chain_series(cmd.k, cmd.n))
    ok = verify_series(cmd.k, cmd.n).passed
    if cmd.output_format == "json":
        return _json({f"{a},{b}": v for (a, b), v in counts.items()}), ok
    rows = [{"n": a, "ell": b, "value": v} for (a, b), v in counts.items()]
    return _csv(rows), ok


def run_verify_all(cmd: Command) -> Outcome:
    """The full sweep, one row per check."""
    results = run_acceptance(cmd.n, jobs=cmd.jobs, long=cmd.long)
    rows = [r.model_dump() for r in results]
    return _rows_or_json(rows, cmd.output_format), all(r.passed for r in results)


def _common_parser(n: int = 3, k: int = 1, output_format: str = "csv") -> argparse.ArgumentParser:
    """Shared flags; a fresh parent per subcommand so defaults stay local."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=n, help="Ground-set size")
    common.add_argument("--k", type=int, default=k, help="Multichain length or divisibility")
    common.add_argument("--l", dest="ell", type=int, default=None, help="Single rank to report")
    common.add_argument(
        "--format", dest="output_format", choices=OUTPUT_FORMATS, default=output_format
    )
    common.add_argument("--output", type=Path, default=None, help="Write here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes")
    common.add_argument("--long", action="store_true", help="Unlock the n = 5 runs")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="parking-poset", description="Exact computations on the parking poset."
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("--quiet", action="store_true", help="Errors only")
    subparsers = parser.add_subparsers(dest="command", required=True)

    convert_p = subparsers.add_parser("convert", help="Convert between representations")
    convert_p.add_argument("--from", dest="source", choices=REPRESENTATIONS, required=True)
    convert_p.add_argument("--to", dest="target", choices=REPRESENTATIONS, required=True)
    convert_p.add_argument("--input", dest="text", required=True, help="Word or JSON object")
    convert_p.add_argument("--k", type=int, default=1)
    convert_p.add_argument("--output", type=Path, default=None)

    subparsers.add_parser(
        "poset", parents=[_common_parser(output_format="dot")], help="Build and export the poset"
    )

    count_p = subparsers.add_parser("count", parents=[_common_parser()], help="Chain and Whitney tables")
    count_p.add_argument("--table", choices=("chains", "whitney", "zeta", "mobius"), default="chains")

    subparsers.add_parser("shelling", parents=[_common_parser()], help="Shelling verification reports")

    homology_p = subparsers.add_parser("homology", parents=[_common_parser()], help="Betti numbers")
    homology_p.add_argument("--character", action="store_true", help="Character table instead")

    subparsers.add_parser("cluster", parents=[_common_parser()], help="Cluster complex checks")

    kdiv_p = subparsers.add_parser("kdivisible", parents=[_common_parser(k=2)], help="k-divisible posets")
    kdiv_p.add_argument("--table", choices=("summary", "primes", "characters"), default="summary")

    subparsers.add_parser("character-table", parents=[_common_parser()], help="Character values")

    subparsers.add_parser(
        "series",
        parents=[_common_parser(n=6, output_format="json")],
        help="Chain series coefficients",
    )

    subparsers.add_parser("verify-all", parents=[_common_parser()], help="Full verification sweep")
    return parser


def _dispatch(args: argparse.Namespace) -> Outcome:
    if args.command == "convert":
        return run_convert(
            ConvertCommand(source=args.source, target=args.target, text=args.text, k=args.k)
        )
    cmd = Command(
        name=args.command,
        n=args.n,
        k=args.k,
        ell=args.ell,
        output_format=args.output_format,
        output=args.output,
        jobs=args.jobs,
        long=args.long,
    )
    handlers: dict[str, Callable[[], Outcome]] = {
        "poset": lambda: run_poset(cmd),
        "count": lambda: run_count(cmd, args.table),
        "shelling": lambda: run_shelling(cmd),
        "homology": lambda: run_homology(cmd, args.character),
        "cluster": lambda: run_cluster(cmd),
        "kdivisible": lambda: run_kdivisible(cmd, args.table),
        "character-table": lambda: run_character_table(cmd),
        "series": lambda: run_series(cmd),
        "verify-all": lambda: run_verify_all(cmd),
    }
    return handlers[args.command]()


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.INFO
    setup_logging(level)
    try:
        text, passed = _dispatch(args)
    except (ValidationError, GuardExceededError, ConversionError, ValueError) as e:
        logger.error("Invalid arguments: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", args.output)
    else:
        sys.stdout.write(text)
    if not passed:
        logger.error("%s: a check failed", args.command)
        return 1
    return 0
