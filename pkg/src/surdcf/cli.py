"""Command-line front end.

Subcommands: expand, scan, family, analytic, lsets.  Machine-readable
output goes to --out (or stdout) as CSV or JSONL with a fixed field
order; human summaries go to stderr.  Exit status: 0 success, 1 usage or
I/O error, 2 theorem falsification or internal-consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import random
import sys
from fractions import Fraction

from . import analytic, family, theorems
from .cf import expand_sqrt, expansion_record
from .errors import InternalConsistencyError, TheoremFalsified
from .kernel import is_square
from .scan import ALL_THEOREMS, ROW_FIELDS, ScanConfig, run_scan

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this CLI reserves 2 for falsification
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def emit(records, fieldnames, fmt: str, path=None) -> None:
    """Write records (dicts) in the documented field order; CSV always
    carries a header row."""
    out, close = _open_out(path)
    try:
        if fmt == "csv":
            w = csv.writer(out)
            w.writerow(fieldnames)
            for r in records:
                w.writerow([r[k] for k in fieldnames])
        else:
            for r in records:
                out.write(json.dumps({k: r[k] for k in fieldnames}))
                out.write("\n")
    finally:
        if close:
            out.close()


def _cmd_expand(args) -> int:
    ds = []
    if args.d is not None:
        ds = [args.d]
    else:
        if args.max is None:
            raise UsageError("expand needs --d or --max")
        ds = [D for D in range(max(2, args.min), args.max + 1) if not is_square(D)]
    records = [expansion_record(expand_sqrt(D, with_trace=False)) for D in ds]
    if args.format == "csv":
        rows = [
            {"D": r["D"], "a0": r["a0"], "period": " ".join(map(str, r["period"])), "T": r["T"]}
            for r in records
        ]
        emit(rows, ("D", "a0", "period", "T"), "csv", args.out)
    else:
        emit(records, ("D", "a0", "period", "T"), "jsonl", args.out)
    return EXIT_OK


def _cmd_scan(args) -> int:
    cfg = ScanConfig(
        lo=max(args.min, 1),
        hi=args.max,
        forms=tuple(args.forms.split(",")),
        theorems=tuple(args.theorems.split(",")),
        emit_rows=args.out is not None,
        workers=args.workers,
        block=args.block,
    )
    rows: list[tuple] = []
    summary = run_scan(cfg, row_sink=rows.append if cfg.emit_rows else None)
    if cfg.emit_rows:
        records = [dict(zip(ROW_FIELDS, row)) for row in rows]
        emit(records, ROW_FIELDS, args.format, args.out)
    print(
        f"checked={summary.checked} agreements={summary.agreements} "
        f"violations={len(summary.violations)} elapsed={summary.elapsed:.2f}s",
        file=sys.stderr,
    )
    for v in summary.violations:
        print(f"VIOLATION D={v.D} {v.theorem}: {v.detail}", file=sys.stderr)
    return EXIT_FALSIFIED if summary.violations else EXIT_OK


def _cmd_family(args) -> int:
    word = tuple(int(x) for x in args.word.split(",")) if args.word else ()
    spec = family.efg(word)
    poly = family.family_poly(spec)
    report = {
        "word": list(word),
        "l": spec.l,
        "E": spec.E,
        "F": spec.F,
        "G": spec.G,
        "case": poly.case_tag,
    }
    if poly.case_tag != "infeasible":
        report["poly"] = {
            "a": poly.a,
            "b": poly.b,
            "c": poly.c,
            "t0": poly.t0,
            "t0_closed_form": family.closed_form_t0(spec),
            "discriminant": poly.discriminant,
        }
        if spec.l % 2 == 0:
            fac = family.factorize(spec)
            report["factorization"] = {
                "E_plus": fac.E_plus,
                "E_minus": fac.E_minus,
                "G_plus": fac.G_plus,
                "G_minus": fac.G_minus,
                "left": list(fac.left),
                "right": list(fac.right),
            }
            report["prime_candidates"] = [
                dataclasses.asdict(c) for c in family.prime_candidates(spec)
            ]
        trips = []
        for t, D in family.admissible_values(spec, args.count):
            a0_formula = family.closed_form_a0(spec, t)
            e = expand_sqrt(D, with_trace=False)
            trips.append(
                {
                    "t": t,
                    "D": D,
                    "period_ok": family.roundtrip_validate(spec, t),
                    "a0": e.a0,
                    "a0_closed_form": str(a0_formula),
                    "a0_formula_agrees": a0_formula == e.a0,
                }
            )
        report["roundtrips"] = trips
    out, close = _open_out(args.out)
    try:
        json.dump(report, out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


_ANALYTIC_FIELDS = ("D", "Delta", "L1_lo", "L1_hi", "reg", "h", "T", "bound_rhs", "holds")
_Q51_FIELDS = ("m", "p", "T", "ratio", "below_one")


def _analytic_row(r: analytic.AnalyticReport) -> dict:
    return {
        "D": r.D,
        "Delta": r.delta,
        "L1_lo": f"{float(r.L1.lo):.12g}",
        "L1_hi": f"{float(r.L1.hi):.12g}",
        "reg": f"{r.regulator:.12g}",
        "h": r.h,
        "T": r.l,
        "bound_rhs": f"{float(r.bound_rhs):.12g}",
        "holds": r.holds,
    }


def _cmd_analytic(args) -> int:
    if args.q51:
        res = analytic.q51_scan(args.q51)
        records = [
            {
                "m": row.m,
                "p": row.p,
                "T": row.T,
                "ratio": f"{row.ratio:.12g}",
                "below_one": row.below_one,
            }
            for row in res.rows
        ]
        emit(records, _Q51_FIELDS, args.format, args.out)
        print(
            f"max_ratio={res.max_ratio:.6f} at m={res.argmax_m} "
            f"all_below_one={res.all_below_one}",
            file=sys.stderr,
        )
        return EXIT_OK
    if args.d is not None:
        ds = [args.d]
    elif args.max_d is not None:
        from .kernel import is_squarefree

        ds = [D for D in range(2, args.max_d + 1) if is_squarefree(D)]
    else:
        raise UsageError("analytic needs --d, --max-d, or --q51")
    precision = Fraction(args.precision) if args.precision else Fraction(1, 20)
    records = [
        _analytic_row(analytic.period_bound_check(D, l1_target=precision))
        for D in ds
    ]
    emit(records, _ANALYTIC_FIELDS, args.format, args.out)
    return EXIT_OK


def _cmd_lsets(args) -> int:
    res = theorems.l_sets(args.i, args.max)
    out, close = _open_out(args.out)
    try:
        json.dump({"i": res.i, "bound": res.bound, "members": list(res.members)}, out)
        out.write("\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def _build_parser() -> _Parser:
    p = _Parser(prog="surdcf", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="jsonl"):
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.add_argument("--format", choices=("csv", "jsonl"), default=fmt)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property runs")

    sp = sub.add_parser("expand", help="periodic expansion of sqrt(D)")
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--min", type=int, default=2)
    sp.add_argument("--max", type=int, default=None)
    common(sp)
    sp.set_defaults(func=_cmd_expand)

    sp = sub.add_parser("scan", help="verify structure theorems over a prime range")
    sp.add_argument("--min", type=int, default=1)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--forms", default="p,2p")
    sp.add_argument("--theorems", default=",".join(ALL_THEOREMS))
    sp.add_argument("--block", type=int, default=1 << 14)
    common(sp, fmt="csv")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("family", help="Friesen family of a palindromic word")
    sp.add_argument("--word", default="", help="comma-separated inner word, e.g. 1,1,1")
    sp.add_argument("--count", type=int, default=20, help="admissible t values to test")
    common(sp)
    sp.set_defaults(func=_cmd_family)

    sp = sub.add_parser("analytic", help="L(1,chi), units, h, period bound")
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--max-d", type=int, default=None)
    sp.add_argument("--precision", default=None, help="L1 interval width target")
    sp.add_argument("--q51", type=int, default=None, metavar="M",
                    help="scan T_(p_m)/(sqrt(m) log m) for 5 <= m <= M")
    common(sp, fmt="csv")
    sp.set_defaults(func=_cmd_analytic)

    sp = sub.add_parser("lsets", help="primes whose period contains 1 exactly i times")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_lsets)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        random.seed(args.seed)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TheoremFalsified, InternalConsistencyError) as exc:
        print(f"FALSIFIED: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
