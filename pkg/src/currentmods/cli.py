"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .character import Character
from .constructions import (
    InconclusiveAtCap,
    NotFree,
    demazure_local,
    dual_character,
    fat_base_change,
    fiber_point,
    fiber_zero,
    fusion,
    global_demazure,
)
from .hwalg import build_hw_algebra, hilbert_A_lambda, hilbert_via_arrangement
from .modules import evaluation_module
from .oracle import oracle_character
from .rootsys import UnsupportedAlgebra, build_root_system
from .verify import GRIDS, exit_status, report_json, run_suite, summary_table

_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


class UsageError(ValueError):
    pass


def parse_coweights(text: str, rank: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for part in text.split(";"):
        try:
            lam = tuple(int(x) for x in part.split(","))
        except ValueError:
            raise UsageError(f"--coweights: {part!r} is not a list of integers") from None
        if len(lam) != rank:
            raise UsageError(f"--coweights: {part!r} needs {rank} entries")
        if any(m < 0 for m in lam):
            raise UsageError(f"--coweights: {part!r} is not dominant")
        out.append(lam)
    return tuple(out)


def parse_points(text: str) -> tuple[Fraction, ...]:
    out = []
    for part in text.split(","):
        if not _RATIONAL.match(part):
            raise UsageError(f"--points: {part!r} is not an integer or p/q rational")
        q = Fraction(part.replace(" ", ""))
        out.append(q)
    return tuple(out)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="currentmods", description="Characters of current-algebra modules.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, coweights=True, level=True, cap=True, points=False):
        sp.add_argument("--algebra", default="A1", help="A1, A2 or A3")
        if coweights:
            sp.add_argument("--coweights", required=True, help='e.g. "1,0;0,1"')
        if level:
            sp.add_argument("--level", type=int, default=1)
        if cap:
            sp.add_argument("--cap", type=int, default=4)
        if points:
            sp.add_argument("--points", help='rationals "c1,c2,..." written p/q or integer')
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--out", help="write output to this path")

    sp = sub.add_parser("char", help="graded character of a module")
    common(sp)
    sp.add_argument("--module", choices=("local", "global", "fat"), default="local",
                    help="local D of the summed coweight, global module, or fat base change")
    sp = sub.add_parser("fiber", help="fiber of the global module at 0 or at --points")
    common(sp, points=True)
    sp = sub.add_parser("fusion", help="fusion product of evaluation modules")
    common(sp, level=False, cap=False, points=True)
    sp = sub.add_parser("hilbert", help="Hilbert series of the highest-weight algebra")
    common(sp, level=False)
    sp.add_argument("--method", choices=("generated", "arrangement", "closed"), default="generated")
    sp = sub.add_parser("oracle", help="Demazure character from the affine Weyl group")
    common(sp)
    sp = sub.add_parser("dual", help="character of the dual of the global module")
    common(sp)
    sp = sub.add_parser("verify", help="run a verification grid")
    sp.add_argument("--grid", choices=sorted(GRIDS), default="default")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.add_argument("--out", help="write the JSON report to this path")
    return p


def _character_output(ch: Character, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(ch.to_records())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        rank = ch.rank or 0
        w.writerow(["q"] + [f"w{i + 1}" for i in range(rank)] + ["coeff"])
        for r in ch.to_records():
            w.writerow([r["q"]] + r["weight"] + [r["coeff"]])
        return buf.getvalue().rstrip("\n")
    return repr(ch)


def _series_output(series: list[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(series)
    if fmt == "csv":
        return "\n".join(["q,dim"] + [f"{d},{c}" for d, c in enumerate(series)])
    return " + ".join(f"{c}*q^{d}" for d, c in enumerate(series) if c) or "0"


def _check_args(args, rs) -> None:
    if getattr(args, "level", 1) < 1:
        raise UsageError("--level must be positive")
    if getattr(args, "cap", 0) < 0:
        raise UsageError("--cap must be nonnegative")


def _run(args) -> tuple[str, int]:
    if args.command == "verify":
        specs = GRIDS[args.grid](args.seed)
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        results = run_suite(specs, jobs=args.jobs)
        text = report_json(results, seed=args.seed) if args.format == "json" else summary_table(results)
        if args.out and args.format == "text":
            with open(args.out, "w") as fh:
                fh.write(report_json(results, seed=args.seed) + "\n")
            args.out = None
        return text, exit_status(results)

    try:
        rs = build_root_system(args.algebra)
        rs.require_engine()
    except UnsupportedAlgebra as exc:
        raise UsageError(f"--algebra: {exc}") from None
    _check_args(args, rs)
    lams = parse_coweights(args.coweights, rs.rank)
    points = parse_points(args.points) if getattr(args, "points", None) else None
    if points is not None and len(points) != len(lams):
        raise UsageError("--points needs one rational per coweight")
    lam = tuple(sum(c) for c in zip(*lams))
    fmt = args.format

    if args.command == "char":
        if args.module == "local":
            ch = demazure_local(rs, args.level, lam).character().truncate(args.cap)
        elif args.module == "global":
            ch = global_demazure(rs, args.level, lams, args.cap).character()
        else:
            ch = fat_base_change(rs, args.level, lams, args.cap).character()
        return _character_output(ch, fmt), 0
    if args.command == "fiber":
        R = global_demazure(rs, args.level, lams, args.cap)
        ch = fiber_point(R, points).character if points is not None else fiber_zero(R).character()
        return _character_output(ch, fmt), 0
    if args.command == "fusion":
        mods = [evaluation_module(rs, rs.iota(l)) for l in lams]
        try:
            ch = fusion(mods, points).character()
        except ValueError as exc:
            raise UsageError(f"--points: {exc}") from None
        return _character_output(ch, fmt), 0
    if args.command == "hilbert":
        if args.method == "generated":
            series = build_hw_algebra(rs, lams, args.cap).hilbert
        elif args.method == "arrangement":
            series = hilbert_via_arrangement(rs, lams, args.cap)
        else:
            series = hilbert_A_lambda(rs, lam, args.cap)
        return _series_output(series, fmt), 0
    if args.command == "oracle":
        return _character_output(oracle_character(rs, args.level, lam, args.cap), fmt), 0
    if args.command == "dual":
        R = global_demazure(rs, args.level, lams, args.cap)
        return _character_output(dual_character(R, args.cap), fmt), 0
    raise UsageError(f"unknown command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = _run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InconclusiveAtCap, NotFree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
