"""Command-line front end.

Machine-readable output only: JSON (one object per line, keys sorted) or
CSV with a fixed column order.  Exact rationals are serialized as "p/q"
strings, floats as shortest round-trip decimals.  Exit codes: 0 success,
2 usage error, 3 domain error, 4 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .core import ReducedFraction, WeightFn, Window, expand, stat_alt, stat_max, stat_sum
from .dedekind import dedekind_bh
from .discrepancy import reduced_fraction_discrepancy
from .ensemble import (StatSpec, TheoremConstants, constants, digit_histogram,
                       scan)
from .errors import CfqError, LimitExceeded
from .farey import bd_tail, hensley_tail, vardi_sample
from .search import min_max_quotient, min_sum, zaremba_scan
from .weight import IntervalQ


def _frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("CFQ_WORKERS", "1")))
    except ValueError:
        return 1


def _weight_from_name(name: str) -> WeightFn:
    return {"one": WeightFn.one(), "identity": WeightFn.identity(),
            "square": WeightFn.square()}[name]


def _emit(out, line: str) -> None:
    out.write(line + "\n")


def cmd_expand(args, out) -> int:
    frac = ReducedFraction(args.a, args.N)
    cf = expand(frac)
    record = {
        "a": frac.a,
        "N": frac.N,
        "digits": list(cf.digits),
        "convergents": [[p, q] for p, q in cf.convergents],
        "S": stat_sum(cf),
        "M": stat_max(cf),
        "S_alt": stat_alt(cf),
        "D": _frac_str(dedekind_bh(frac)),
    }
    _emit(out, json.dumps(record, sort_keys=True))
    return 0


def _spec_from_args(args) -> StatSpec:
    if args.stat == "L":
        return StatSpec("L", b=args.b, c=args.c)
    if args.stat == "restricted":
        return StatSpec("restricted", f=_weight_from_name(args.f),
                        eta=args.eta, theta=args.theta)
    return StatSpec(args.stat)


def _summary_record(summary) -> dict:
    rec = {
        "N": summary.N,
        "phi": summary.phi,
        "stat": summary.spec.label(),
        "mean": summary.mean,
        "variance": summary.variance,
    }
    for t in sorted(summary.tail_counts):
        rec[f"tail@{t:g}"] = summary.tail_fraction(t)
    return rec


def cmd_scan(args, out) -> int:
    if (args.N is None) == (args.range is None):
        print("cfq scan: give either a single N or --range LO HI",
              file=sys.stderr)
        raise SystemExit(2)
    spec = _spec_from_args(args)
    thresholds = [float(t) for t in args.t.split(",")] if args.t else []
    Ns = [args.N] if args.N is not None else list(range(args.range[0],
                                                        args.range[1] + 1))
    header_done = False
    for N in Ns:
        summary = scan(N, spec, thresholds=thresholds, workers=args.workers)
        rec = _summary_record(summary)
        if args.format == "csv":
            cols = ["N", "phi", "stat", "mean", "variance"] + \
                [f"tail@{t:g}" for t in sorted(thresholds)]
            if not header_done:
                _emit(out, ",".join(cols))
                header_done = True
            _emit(out, ",".join(repr(rec[c]) if isinstance(rec[c], float)
                                else str(rec[c]) for c in cols))
        else:
            _emit(out, json.dumps(rec, sort_keys=True))
    return 0


def cmd_dedekind(args, out) -> int:
    d = dedekind_bh(ReducedFraction(args.a, args.N))
    _emit(out, json.dumps({"N": args.N, "a": args.a, "D": _frac_str(d),
                           "D_decimal": float(d)}, sort_keys=True))
    return 0


def cmd_discrepancy(args, out) -> int:
    rng = IntervalQ(Fraction(args.lo), Fraction(args.hi), True, True)
    report = reduced_fraction_discrepancy(args.N, rng)
    _emit(out, json.dumps({
        "N": args.N,
        "range": str(rng),
        "value": _frac_str(report.value),
        "value_decimal": float(report.value),
        "witness": str(report.witness),
    }, sort_keys=True))
    return 0


def cmd_search(args, out) -> int:
    lo, hi = args.range
    if args.zaremba is not None:
        bad = zaremba_scan(lo, hi, args.zaremba)
        _emit(out, json.dumps({"K": args.zaremba, "range": [lo, hi],
                               "without_witness": bad}, sort_keys=True))
        return 0
    finder = min_sum if args.min_stat == "S" else min_max_quotient
    _emit(out, "N,argmin,min,bound,margin")
    for N in range(lo, hi + 1):
        rec = finder(N)
        margin = rec.min_value - rec.bound_value
        _emit(out, f"{rec.N},{rec.argmin_a},{rec.min_value},"
                   f"{rec.bound_value!r},{margin!r}")
    return 0


def cmd_farey(args, out) -> int:
    if args.law == "hensley":
        emp, lim = hensley_tail(args.Q, args.t)
        rec = {"Q": args.Q, "law": "hensley", "t": args.t,
               "fraction": emp, "limit": lim}
    elif args.law == "bd":
        frac, prod = bd_tail(args.Q, args.t)
        rec = {"Q": args.Q, "law": "bd", "t": args.t,
               "fraction": frac, "t_times_fraction": prod}
    else:
        r = vardi_sample(args.Q)
        rec = {"Q": args.Q, "law": "vardi", "count": r.count,
               "probes": list(r.probes),
               "empirical_cdf": list(r.empirical_cdf),
               "cauchy_cdf": list(r.cauchy_cdf),
               "sup_distance": r.sup_distance}
    _emit(out, json.dumps(rec, sort_keys=True))
    return 0


def cmd_gk(args, out) -> int:
    h = digit_histogram(args.N, args.max_digit, workers=args.workers)
    _emit(out, "m,freq,target,diff")
    for m in range(1, args.max_digit + 1):
        _emit(out, f"{m},{h['freq'][m]!r},{h['target'][m]!r},"
                   f"{h['freq'][m] - h['target'][m]!r}")
    return 0


def cmd_constants(args, out) -> int:
    tc = constants(_weight_from_name(args.f), Window(args.eta, args.theta),
                   args.b, args.c)
    rec = {k: getattr(tc, k) for k in
           ("A", "B", "C", "D", "Dprime", "Xi", "mu")}
    rec.update({"f": args.f, "eta": args.eta, "theta": args.theta,
                "b": args.b, "c": args.c})
    _emit(out, json.dumps(rec, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfq",
        description="Exact statistics of partial quotients of reduced "
                    "fractions with fixed denominator.")
    parser.add_argument("-o", "--output", help="write output to this path "
                                               "instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="continued fraction record of a/N")
    p.add_argument("N", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser(
        "scan",
        help="ensemble moments and tails over Z_N*; CSV columns are fixed "
             "as N, phi, stat, mean, variance, then one tail@t column per "
             "threshold")
    p.add_argument("N", type=int, nargs="?")
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"),
                   help="scan every N in [LO, HI], one output line each")
    p.add_argument("--stat", default="S",
                   choices=["S", "M", "L", "S_alt", "D", "restricted"])
    p.add_argument("--t", help="comma-separated tail thresholds (times ln N)")
    p.add_argument("--b", type=int, help="window start for --stat L")
    p.add_argument("--c", type=int, help="window end for --stat L")
    p.add_argument("--f", default="one", choices=["one", "identity", "square"],
                   help="weight for --stat restricted")
    p.add_argument("--eta", type=int, help="window start for restricted")
    p.add_argument("--theta", type=int, help="window end for restricted")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("dedekind", help="Dedekind sum D(a/N), exact")
    p.add_argument("N", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("discrepancy",
                       help="extreme discrepancy of {a/N} within a range")
    p.add_argument("N", type=int)
    p.add_argument("--lo", default="0", help="range start, as p/q")
    p.add_argument("--hi", default="1", help="range end, as p/q")
    p.set_defaults(func=cmd_discrepancy)

    p = sub.add_parser("search",
                       help="extremal fractions; CSV columns N, argmin, min, "
                            "bound, margin")
    p.add_argument("--min-stat", default="M", choices=["S", "M"])
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"),
                   required=True)
    p.add_argument("--zaremba", type=int, metavar="K",
                   help="list denominators with no all-digits-<=K numerator")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("farey", help="Farey-ensemble limit-law comparisons")
    p.add_argument("Q", type=int)
    p.add_argument("--law", default="hensley",
                   choices=["hensley", "vardi", "bd"])
    p.add_argument("--t", type=float, default=2.0)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("gk",
                       help="digit histogram vs the Gauss-Kuzmin law; CSV "
                            "columns m, freq, target, diff")
    p.add_argument("N", type=int)
    p.add_argument("--max-digit", type=int, default=5)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=cmd_gk)

    p = sub.add_parser("constants", help="theorem constants for a weight")
    p.add_argument("--f", default="one", choices=["one", "identity", "square"])
    p.add_argument("--eta", type=int, default=1)
    p.add_argument("--theta", type=int, default=5)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.set_defaults(func=cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.output:
            with open(args.output, "w") as out:
                return args.func(args, out)
        return args.func(args, sys.stdout)
    except LimitExceeded as exc:
        print(f"cfq: {exc}", file=sys.stderr)
        return 4
    except CfqError as exc:
        print(f"cfq: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"cfq: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
