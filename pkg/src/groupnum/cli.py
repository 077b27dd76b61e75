"""Command-line surface: classify orders, print or build witnesses, run the
verification suite, and dump/load/check group tables.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from . import groups as groupmod
from .analysis import GROUP_TESTS
from .classify import PROPERTIES, classify, classify_range, diagnose, property_flags
from .construct import WitnessRecipe, make_witness, recipe_for
from .crosscheck import VerificationError, run_suite, write_report
from .groups import TableError

RANGE_MAX = 10**6
SINGLE_MAX = 10**9  # trial-division contract; larger inputs are refused
SUITE_MAX = 10**5  # verify ceiling; witnesses above the order cap are skipped anyway

CSV_COLUMNS = (
    "n",
    "factorization",
    "cyclic",
    "abelian",
    "nilpotent",
    "supersolvable",
    "ordered_sylow",
    "abelian_count",
    "diagnoses",
)


def _record_line(record: dict) -> str:
    """Canonical one-line JSON form; cache entries must be byte-identical."""
    return json.dumps(record, separators=(",", ":"))


def _fact_str(record: dict) -> str:
    factors = record["factorization"]
    if not factors:
        return "1"
    return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in factors)


def _diagnoses_str(record: dict) -> str:
    parts = []
    for d in record["diagnoses"]:
        inner = ",".join(f"{k}={v}" for k, v in d["params"].items())
        parts.append(f"{d['property']}:{d['kind']}({inner})")
    return "|".join(parts)


def _emit_table(records, out):
    head = f"{'n':>7}  {'factorization':<18} {'C':>1} {'A':>1} {'N':>1} {'S':>1} {'T':>1}  {'#ab':>4}  diagnoses"
    print(head, file=out)
    for rec in records:
        marks = " ".join(
            "T" if rec[p] else "F"
            for p in ("cyclic", "abelian", "nilpotent", "supersolvable", "ordered_sylow")
        )
        count = str(rec.get("abelian_count", ""))
        print(
            f"{rec['n']:>7}  {_fact_str(rec):<18} {marks}  {count:>4}  {_diagnoses_str(rec)}",
            file=out,
        )


def _emit_csv(records, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(
            [
                rec["n"],
                _fact_str(rec),
                rec["cyclic"],
                rec["abelian"],
                rec["nilpotent"],
                rec["supersolvable"],
                rec["ordered_sylow"],
                rec.get("abelian_count", ""),
                _diagnoses_str(rec),
            ]
        )


def _emit_json(records, out, single: bool):
    if single:
        print(json.dumps(records[0], indent=2), file=out)
    else:
        print(json.dumps(records, indent=2), file=out)


@dataclass
class OutputDocument:
    """Classification records plus the format they render in.

    The JSON form round-trips to the same records; the CSV column order is
    fixed (CSV_COLUMNS) and documented in the README.
    """

    format: str  # table | json | csv
    records: list

    def emit(self, out, single: bool = False):
        if self.format == "table":
            _emit_table(self.records, out)
        elif self.format == "csv":
            _emit_csv(self.records, out)
        else:
            _emit_json(self.records, out, single)


def _load_cache(path) -> dict[int, str]:
    cache = {}
    try:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    cache[json.loads(line)["n"]] = line
    except FileNotFoundError:
        pass
    return cache


def cmd_classify(args, out=None) -> int:
    out = out or sys.stdout
    if args.range:
        lo, hi = args.range
        if not (1 <= lo <= hi <= RANGE_MAX):
            raise UsageError(f"range must satisfy 1 <= A <= B <= {RANGE_MAX}")
        fresh = (r.as_dict() for r in classify_range(lo, hi))
        wanted = range(lo, hi + 1)
        single = False
    else:
        n = args.n
        if n is None:
            raise UsageError("give an order n or --range A B")
        if not (1 <= n <= SINGLE_MAX):
            raise UsageError(f"n must be in 1..{SINGLE_MAX}")
        fresh = iter([classify(n).as_dict()])
        wanted = range(n, n + 1)
        single = True

    if args.cache:
        cache = _load_cache(args.cache)
        records = []
        for n in wanted:
            if n in cache:
                records.append(json.loads(cache[n]))
            else:
                rec = classify(n).as_dict()
                cache[n] = _record_line(rec)
                records.append(rec)
        with open(args.cache, "w") as fh:
            for key in sorted(cache):
                fh.write(cache[key] + "\n")
    else:
        records = list(fresh)

    OutputDocument(args.format, records).emit(out, single)
    return 0


def cmd_witness(args, out=None) -> int:
    out = out or sys.stdout
    n, prop = args.n, args.property
    from .arith import factorize

    flags = dict(zip(PROPERTIES, property_flags(factorize(n))))
    if flags[prop]:
        raise UsageError(f"no witness exists: {n} is a {prop} number")
    recipe = recipe_for(n, diagnose(n, prop)[0])
    print(recipe.line(), file=out)
    if args.build:
        try:
            witness = make_witness(recipe)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        out.write(groupmod.dumps(witness))
        test = GROUP_TESTS[prop]
        verdict = bool(test(witness))
        print(f"{test.__name__}: {str(verdict).lower()}", file=out)
        if verdict:
            return 1  # the witness failed to refute the property
    return 0


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if not (1 <= args.max <= SUITE_MAX):
        raise UsageError(f"--max must be in 1..{SUITE_MAX}")
    props = tuple(args.property) if args.property else PROPERTIES
    try:
        result = run_suite(
            max_n=args.max,
            properties=props,
            progress=out if args.verbose else None,
        )
    except VerificationError as exc:
        print(f"FAIL: {exc}", file=out)
        return 1
    if args.report:
        with open(args.report, "w") as fh:
            write_report(result.records, fh)
    print(result.summary(), file=out)
    return 0


def cmd_group(args, out=None) -> int:
    out = out or sys.stdout
    if args.action == "dump":
        try:
            recipe = WitnessRecipe.parse(args.recipe)
            witness = make_witness(recipe)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        text = groupmod.dumps(witness)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0
    with open(args.path) as fh:
        text = fh.read()
    try:
        G = groupmod.loads(text)
    except TableError as exc:
        print(f"invalid table: {exc}", file=out)
        return 1
    if args.action == "load":
        sym = bool((G.table == G.table.T).all())
        print(f"order {G.order}, identity {G.identity}, abelian {str(sym).lower()}", file=out)
    else:  # check
        print("ok", file=out)
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupnum",
        description="Classify group orders arithmetically and build witness groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="evaluate the five predicates at n")
    p_classify.add_argument("n", nargs="?", type=int, default=None)
    p_classify.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    p_classify.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_classify.add_argument("--cache", metavar="PATH")
    p_classify.set_defaults(func=cmd_classify)

    p_witness = sub.add_parser("witness", help="print (and build) a counterexample")
    p_witness.add_argument("n", type=int)
    p_witness.add_argument("--property", choices=PROPERTIES, required=True)
    p_witness.add_argument("--build", action="store_true")
    p_witness.set_defaults(func=cmd_witness)

    p_verify = sub.add_parser("verify", help="run the crosscheck suite")
    p_verify.add_argument("--max", type=int, default=300)
    p_verify.add_argument("--property", action="append", choices=PROPERTIES)
    p_verify.add_argument("--report", metavar="PATH")
    p_verify.add_argument("--verbose", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_group = sub.add_parser("group", help="dump, load or check a group table")
    gsub = p_group.add_subparsers(dest="action", required=True)
    g_dump = gsub.add_parser("dump", help="build a recipe and print its table")
    g_dump.add_argument("recipe", help="witness recipe line, e.g. 'kind=redei_f1 p=3 q=2 u=1 cofactor=1'")
    g_dump.add_argument("--out", metavar="PATH")
    g_load = gsub.add_parser("load", help="validate a table file and summarize it")
    g_load.add_argument("path")
    g_check = gsub.add_parser("check", help="validate a table file")
    g_check.add_argument("path")
    p_group.set_defaults(func=cmd_group)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
