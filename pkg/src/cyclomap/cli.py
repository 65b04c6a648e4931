"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 domain precondition failed
(e.g. ell does not divide q-1), 4 spec is not a permutation.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import islice
from typing import Sequence, TextIO

from .cyclo import divisors, format_ints, format_spec, parse_spec
from .errors import CycloError, NotAPermutation, SpecParseError
from .gf_core import PRESETS, FieldCtx, preset, resolve_field
from .permcheck import count_fixed_points, invert, is_involution, is_permutation
from .polyform import expand, format_poly
from .search import (
    SearchQuery,
    count_summary,
    default_jobs,
    enumerate_pps,
    indices_up_to,
)
from .verify import run_verification

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NOT_PP = 4

FIELD_ENV = "CYCLOMAP_FIELD"
TSV_COLUMNS = ["ell", "r", "k", "rr", "kk", "involution", "nonzero_fixed_points"]
GOLDEN_PP_COLUMNS = ["r", "k", "f", "rr", "kk", "involution", "f_inv"]
GOLDEN_INV_COLUMNS = ["r", "k", "f", "nonzero_fixed_points"]


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _int_csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_field_arg(p: argparse.ArgumentParser, default) -> None:
    p.add_argument(
        "--field",
        default=default,
        help=f"preset ({', '.join(PRESETS)}), inline 'p m modulus gamma', or preset file; "
        f"defaults to ${FIELD_ENV} or F25",
    )


def _add_index_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--ell", type=int, action="append", help="index to enumerate (repeatable)")
    g.add_argument("--ell-max", type=int, help="every divisor of q-1 up to this bound")
    g.add_argument("--all-ell", action="store_true", help="every divisor of q-1")
    p.add_argument(
        "--convention",
        choices=["maximal", "each"],
        help="index counting convention; default 'each' with --all-ell, else 'maximal'",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclomap",
        description="Cyclotomic-mapping permutation polynomials over small finite fields.",
    )
    _add_field_arg(parser, None)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_field_arg(p, argparse.SUPPRESS)
        return p

    command("fields", help="list built-in field presets")

    p = command("expand", help="print the polynomial of a spec")
    p.add_argument("spec", help="e.g. 'ell=2 r=1,7 k=0,0'")

    p = command("invert", help="print the inverse spec")
    p.add_argument("spec")
    p.add_argument("--polys", action="store_true", help="also print the inverse polynomial")

    p = command("check", help="permutation, involution and fixed-point report")
    p.add_argument("spec")

    p = command("search", help="enumerate permutations, inverses and involutions")
    _add_index_args(p)
    p.add_argument("--involutions", action="store_true", help="only involutions")
    p.add_argument("--max-fp", type=int, help="keep records with at most this many nonzero fixed points")
    p.add_argument("--polys", action="store_true", help="add f and f_inv columns")
    p.add_argument("--format", choices=["tsv", "text", "golden"], default="tsv")
    p.add_argument("--count-only", action="store_true", help="print pps=N involutions=M only")
    p.add_argument("--fix-r", type=_int_csv, help="pin r: one value for all positions or a full vector")
    p.add_argument("--limit", type=int, help="stop after this many records (runs sequentially)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")

    p = command("verify", help="cross-check closed forms against brute-force tables")
    _add_index_args(p)
    p.add_argument("--all-specs", action="store_true", help="also sweep the criterion over every canonical spec")

    return parser


def _resolve_field(args) -> FieldCtx:
    desc = args.field or os.environ.get(FIELD_ENV) or "F25"
    try:
        return resolve_field(desc)
    except KeyError as exc:
        raise SpecParseError(str(exc)) from None


def _resolve_indices(ctx: FieldCtx, args) -> tuple[list[int], str]:
    if args.ell:
        ells = list(args.ell)
    elif args.ell_max is not None:
        ells = indices_up_to(ctx.q, args.ell_max)
    elif args.all_ell:
        ells = divisors(ctx.q - 1)
    else:
        raise SpecParseError("one of --ell, --ell-max, --all-ell is required")
    convention = args.convention or ("each" if args.all_ell else "maximal")
    return ells, convention


def _write_records(out: TextIO, records, fmt: str, polys: bool, involutions: bool) -> None:
    if fmt == "golden":
        cols = GOLDEN_INV_COLUMNS if involutions else GOLDEN_PP_COLUMNS
        out.write("\t".join(cols) + "\n")
        for rec in records:
            if involutions:
                row = [format_ints(rec.spec.r), format_ints(rec.spec.k), rec.poly_text, str(rec.nonzero_fixed_points)]
            else:
                row = [
                    format_ints(rec.spec.r),
                    format_ints(rec.spec.k),
                    rec.poly_text,
                    format_ints(rec.inverse.r),
                    format_ints(rec.inverse.k),
                    _yn(rec.involution),
                    rec.inverse_poly_text,
                ]
            out.write("\t".join(row) + "\n")
        return
    if fmt == "tsv":
        out.write("\t".join(TSV_COLUMNS + (["f", "f_inv"] if polys else [])) + "\n")
    for rec in records:
        if fmt == "tsv":
            row = [
                str(rec.spec.ell),
                format_ints(rec.spec.r),
                format_ints(rec.spec.k),
                format_ints(rec.inverse.r),
                format_ints(rec.inverse.k),
                _yn(rec.involution),
                str(rec.nonzero_fixed_points),
            ]
            if polys:
                row += [rec.poly_text, rec.inverse_poly_text]
            out.write("\t".join(row) + "\n")
        else:
            out.write(
                f"{format_spec(rec.spec)} -> {format_spec(rec.inverse)} "
                f"involution={_yn(rec.involution)} nonzero_fixed_points={rec.nonzero_fixed_points}\n"
            )
            if polys:
                out.write(f"  f = {rec.poly_text}\n  f_inv = {rec.inverse_poly_text}\n")


def cmd_search(ctx: FieldCtx, args, out: TextIO) -> int:
    ells, convention = _resolve_indices(ctx, args)
    fmt = args.format
    polys = args.polys or fmt == "golden"
    if args.count_only and args.max_fp is None and not args.limit:
        pps, invs = count_summary(ctx, ells, fix_r=args.fix_r, convention=convention)
        out.write(f"pps={pps} involutions={invs}\n")
        return 0
    query = SearchQuery(
        ell_list=tuple(ells),
        involutions_only=args.involutions,
        max_fixed_points=args.max_fp,
        emit_polys=polys and not args.count_only,
        fix_r=args.fix_r,
        convention=convention,
    )
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if args.limit is not None:
        jobs = 1
    records = enumerate_pps(ctx, query, jobs=jobs)
    if args.limit is not None:
        records = islice(records, max(args.limit, 0))
    if args.count_only:
        pps = invs = 0
        for rec in records:
            pps += 1
            invs += rec.involution
        out.write(f"pps={pps} involutions={invs}\n")
        return 0
    _write_records(out, records, fmt, polys, args.involutions)
    return 0


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "fields":
            for name in PRESETS:
                f = preset(name)
                out.write(f"{name}\tp={f.p}\tm={f.m}\tq={f.q}\tmodulus={format_ints(f.modulus)}\n")
            return 0
        ctx = _resolve_field(args)
        if args.command == "expand":
            spec = parse_spec(args.spec, ctx.q)
            out.write(format_poly(expand(ctx, spec)) + "\n")
        elif args.command == "invert":
            spec = parse_spec(args.spec, ctx.q)
            inverse = invert(spec)
            out.write(format_spec(inverse) + "\n")
            if args.polys:
                out.write(format_poly(expand(ctx, inverse)) + "\n")
        elif args.command == "check":
            spec = parse_spec(args.spec, ctx.q)
            out.write(
                f"pp={_yn(is_permutation(spec))} involution={_yn(is_involution(spec))} "
                f"nonzero_fixed_points={count_fixed_points(spec)}\n"
            )
        elif args.command == "search":
            return cmd_search(ctx, args, out)
        elif args.command == "verify":
            ells, convention = _resolve_indices(ctx, args)
            report = run_verification(ctx, ells, convention, all_specs=args.all_specs)
            out.write(report.line() + "\n")
            return 0 if report.ok else 1
    except SpecParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NotAPermutation as exc:
        err.write(f"error: NotAPermutation: {exc}\n")
        return EXIT_NOT_PP
    except CycloError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    return 0


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early, e.g. piping into head
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        code = 0
    sys.exit(code)
