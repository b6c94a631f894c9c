"""Command-line front end: ``mayrmeyer {gen,gb,op,verify,bench,catalog,export}``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import bench, formats, verifier
from .catalog import (MMParams, ParameterError, candidate_embedded_set, k_family_ideal, mayr_meyer_ideal,
                      minimal_components, minimal_primes)
from .field import UnsupportedFieldError
from .ideal import Ideal, colon, eliminate, equals, intersect, saturate
from .order import MonomialOrder
from .poly import ParseError

FAMILIES = ("J", "K", "minimal", "component", "embedded")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _params(args) -> MMParams:
    return verifier.default_params(args.n, args.d, args.prime)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _family_entries(args):
    params = _params(args)
    if args.family == "J":
        return params, [("J", mayr_meyer_ideal(params))]
    if args.family == "K":
        return params, [("K", k_family_ideal(params))]
    entries = {"minimal": minimal_primes, "component": minimal_components,
               "embedded": lambda p: candidate_embedded_set(p).entries}[args.family](params)
    return params, [(e.label, e.ideal) for e in entries]


def _source_ideal(args) -> Ideal:
    if getattr(args, "file", None):
        return formats.read_ideal(args.file)[0]
    params, entries = _family_entries(args)
    if len(entries) != 1:
        raise UsageError("this subcommand needs a single ideal: pass a file or --family J/K")
    return entries[0][1]


def cmd_gen(args) -> int:
    params, entries = _family_entries(args)
    if len(entries) == 1:
        _emit(formats.dumps_ideal(entries[0][1], d=params.d, comment=entries[0][0]), args.out)
        return 0
    if not args.out:
        raise UsageError(f"--out DIR is required for the {args.family} family ({len(entries)} ideals)")
    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    for k, (label, I) in enumerate(entries):
        (root / f"{k:03d}.ideal").write_text(formats.dumps_ideal(I, d=params.d, comment=label))
    print(f"wrote {len(entries)} files to {root}")
    return 0


def cmd_gb(args) -> int:
    I = _source_ideal(args)
    gb = I.gb(MonomialOrder.parse(args.order))
    lines = [g.to_str(gb.order) for g in gb.generators]
    _emit("\n".join(lines) + "\n", args.out)
    print(f"# {len(gb)} elements, max degree {gb.stats.max_degree}, {gb.stats.spairs} S-pairs",
          file=sys.stderr)
    return 0


def cmd_op(args) -> int:
    I, header = formats.read_ideal(args.file)
    table = I.table
    if args.operation in ("intersect", "sum", "product", "equals"):
        if not args.other:
            raise UsageError(f"{args.operation} needs a second ideal file")
        other = formats.read_ideal(args.other)[0]
        if other.table != table:
            raise UsageError("the two files define different rings")
        if args.operation == "equals":
            same = equals(I, other)
            print("true" if same else "false")
            return 0 if same else 1
        result = {"intersect": intersect, "sum": lambda a, b: a + b, "product": lambda a, b: a * b}[
            args.operation](I, other)
    elif args.operation in ("colon", "saturate", "member"):
        if not args.poly:
            raise UsageError(f"{args.operation} needs --poly")
        f = table.parse(args.poly)
        if args.operation == "member":
            inside = f in I
            print("true" if inside else "false")
            return 0 if inside else 1
        if args.operation == "colon":
            result = colon(I, f)
        else:
            result, k = saturate(I, f)
            print(f"# stabilised at exponent {k}", file=sys.stderr)
    elif args.operation == "eliminate":
        if not args.vars:
            raise UsageError("eliminate needs --vars")
        result = eliminate(I, args.vars.split(","))
        table = result.table
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(args.operation)
    result = result.reduced()
    _emit(formats.dumps_ideal(result, n=header.get("n"), d=header.get("d")), args.out)
    return 0


def cmd_verify(args) -> int:
    checks = args.check or None
    if args.n is not None or args.d is not None:
        if args.n is None or args.d is None:
            raise UsageError("--n and --d go together")
        params = _params(args)
        reports = []
        for ch in checks or verifier.CHECK_IDS:
            reports += verifier.run_check(ch, params, seed=args.seed, r=args.r, budget=args.budget)
    else:
        reports = verifier.run_all(args.tier, seed=args.seed, checks=checks, p=args.prime, budget=args.budget)
    for rep in reports:
        if args.json:
            print(rep.dumps(timing=not args.no_timing))
        else:
            size = "" if rep.n is None else f" n={rep.n} d={rep.d} p={rep.p}"
            print(f"{rep.verdict.upper():7s} {rep.check}{size} ({rep.millis} ms)")
            for item in rep.failures():
                extra = {k: v for k, v in item.items() if k not in ("name", "ok")}
                print(f"        failed: {item['name']} {json.dumps(extra, sort_keys=True)}")
    return verifier.exit_status(reports)


def cmd_bench(args) -> int:
    sizes = [(n, d) for n in args.n_range for d in args.d_range]
    records = bench.bench_growth(sizes, args.family, p=args.prime, budget=args.budget,
                                 timing=args.timing, parallel=args.parallel)
    _emit(bench.to_csv(records), args.out)
    for key, val in bench.growth_summary(records).items():
        print(f"# {key}: {'unknown' if val is None else str(val).lower()}", file=sys.stderr)
    if args.probe:
        for n, d in sizes:
            print(f"# probe membership at ({n}, {d}): {str(bench.probe_membership(n, d, args.prime)).lower()}",
                  file=sys.stderr)
    return 0


def cmd_catalog(args) -> int:
    params = _params(args)
    rows = formats.catalog_rows(params, args.role, with_heights=not args.no_heights)
    if args.json:
        _emit(json.dumps({"n": params.n, "d": params.d, "p": params.p, "entries": rows},
                         indent=1, sort_keys=True) + "\n", args.out)
        return 0
    lines = [f"{'label':34s} {'role':26s} claimed height"]
    for row in rows:
        lines.append(f"{row['label']:34s} {row['role']:26s} {row['claimed_height']:>7} {row.get('height', '')!s:>6}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_export(args) -> int:
    I = _source_ideal(args)
    _emit(formats.to_cas_script(I, args.dialect), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    size = argparse.ArgumentParser(add_help=False)
    size.add_argument("--n", type=int, default=2, help="number of levels (default 2)")
    size.add_argument("--d", type=int, default=2, help="degree parameter (default 2)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None,
                        help="field characteristic (default 13 when it has the needed roots of unity)")
    common.add_argument("--order", default="grevlex", help="lex, grevlex or block:i,j,...[:inner]")
    common.add_argument("--tier", choices=("fast", "slow"), default="fast")
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--out", default=None, help="output file (directory for gen of a prime family)")

    parser = argparse.ArgumentParser(prog="mayrmeyer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[size, common], help="write .ideal files")
    p.add_argument("--family", choices=FAMILIES, default="J")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("gb", parents=[size, common], help="print a reduced Groebner basis")
    p.add_argument("file", nargs="?")
    p.add_argument("--family", choices=("J", "K"), default="J")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("op", parents=[common], help="ideal operations on .ideal files")
    p.add_argument("operation", choices=("intersect", "sum", "product", "equals", "colon", "saturate",
                                         "member", "eliminate"))
    p.add_argument("file")
    p.add_argument("other", nargs="?")
    p.add_argument("--poly", help="polynomial for colon, saturate and member")
    p.add_argument("--vars", help="comma-separated variables for eliminate")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("verify", parents=[common], help="run the identity checks")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--check", action="append", choices=verifier.CHECK_IDS)
    p.add_argument("--r", type=int, default=None, help="level for section4 (default all)")
    p.add_argument("--budget", type=int, default=verifier.DEFAULT_BUDGET, help="S-pair budget per basis")
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.add_argument("--no-timing", action="store_true", help="omit millis from JSON reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="degree-growth CSV")
    p.add_argument("--n", dest="n_range", type=_int_list, default=[2], help="comma-separated n values")
    p.add_argument("--d", dest="d_range", type=_int_list, default=[2, 3], help="comma-separated d values")
    p.add_argument("--family", type=lambda s: s.split(","), default=["J"], help="J, K or J,K")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="fill the ms column (breaks reproducibility)")
    p.add_argument("--probe", action="store_true", help="also test membership of the degree probe")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("catalog", parents=[size, common], help="list catalog entries with heights")
    p.add_argument("--role", choices=("all", "minimal", "component", "embedded"), default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-heights", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export", parents=[size, common], help="Singular or Macaulay2 script")
    p.add_argument("file", nargs="?")
    p.add_argument("--family", choices=("J", "K"), default="J")
    p.add_argument("--dialect", choices=("singular", "macaulay2"), default="singular")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParameterError, UnsupportedFieldError, ParseError, formats.IdealFileError,
            verifier.UnknownCheckError, ValueError, FileNotFoundError) as exc:
        print(f"mayrmeyer {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
