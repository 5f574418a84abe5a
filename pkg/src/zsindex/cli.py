"""Command-line front end and machine-readable reporting.

Exit codes: 0 success, 2 usage or input error, 3 mathematical check
failure. Reports render as human-readable tables by default; --json emits
the stable schema (shared with the checkpoint ledger), --csv emits flat
rows for verification records. No floats appear in any output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict
from math import gcd

from . import __version__
from .modarith import check_prime_intervals
from .singular import (
    descent_params,
    good_report,
    interval_witness,
    verify_singular_range,
    verify_singular_theorem,
)
from .verifier import (
    SCHEMA_VERSION,
    enumerate_minimal,
    record_to_dict,
    verify_range,
)
from .zseq import index_with_witness, is_zero_sum, new_seq

USAGE_ERROR = 2
CHECK_FAILED = 3


def _report(command: str, params: dict, records: list, t0: float) -> dict:
    return {
        "command": command,
        "params": params,
        "records": records,
        "tool_version": __version__,
        "schema": SCHEMA_VERSION,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }


def _emit(report: dict, args) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report))


def _parse_seq(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError("--seq expects comma-separated integers")


def cmd_index(args) -> int:
    t0 = time.perf_counter()
    try:
        seq = new_seq(args.n, _parse_seq(args.seq))
        if not is_zero_sum(seq):
            print("error: not zero-sum (sum %d)" % sum(seq.elems), file=sys.stderr)
            return USAGE_ERROR
        res = index_with_witness(seq, full=args.full)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    rec = {
        "n": args.n,
        "seq": list(seq.elems),
        "index": res.index,
        "witness": res.witness,
        "norms": {str(g): v for g, v in sorted(res.norms.items())} if args.full else None,
    }
    if args.json:
        _emit(_report("index", {"n": args.n, "seq": args.seq}, [rec], t0), args)
    else:
        print("n=%d seq=%s index=%d witness=%d" % (args.n, seq.elems, res.index, res.witness))
        if args.full:
            for g, v in sorted(res.norms.items()):
                print("  g=%d norm=%d" % (g, v))
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.n is not None:
        lo = hi = args.n
    elif args.range is not None:
        lo, hi = args.range
    else:
        print("error: need --n or --range", file=sys.stderr)
        return USAGE_ERROR
    try:
        records = verify_range(lo, hi, workers=args.jobs, checkpoint=args.checkpoint)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    dicts = [record_to_dict(r) for r in records]
    failed = any(r.max_index != 1 for r in records)
    if args.json:
        _emit(_report("verify", {"lo": lo, "hi": hi}, dicts, t0), args)
    elif args.csv:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["n", "total_minimal", "orbit_count", "max_index", "index2", "elapsed_ms"])
        for r in records:
            writer.writerow(
                [r.n, r.total_minimal, r.orbit_count, r.max_index, len(r.index2_examples), r.elapsed_ms]
            )
        sys.stdout.write(out.getvalue())
    else:
        for r in records:
            print(
                "n=%d minimal=%d orbits=%d max_index=%d%s"
                % (
                    r.n,
                    r.total_minimal,
                    r.orbit_count,
                    r.max_index,
                    "  INDEX-2 FOUND" if r.index2_examples else "",
                )
            )
        print("%d moduli verified, max index %d" % (len(records), max((r.max_index for r in records), default=0)))
    if failed:
        for r in records:
            for seq, norms in r.index2_examples:
                print("index-2 orbit at n=%d: %s norms=%s" % (r.n, seq, norms), file=sys.stderr)
        return CHECK_FAILED
    return 0


def cmd_singular(args) -> int:
    t0 = time.perf_counter()
    if args.n is not None:
        lo = hi = args.n
    elif args.range is not None:
        lo, hi = args.range
    else:
        print("error: need --n or --range", file=sys.stderr)
        return USAGE_ERROR
    try:
        if lo == hi:
            reports = [verify_singular_theorem(lo)]
        else:
            reports = verify_singular_range(lo, hi, workers=args.jobs)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    dicts = [
        {"n": r.n, "checked": r.checked, "violations": [list(v[0]) for v in r.violations]}
        for r in reports
    ]
    if args.json:
        _emit(_report("singular", {"lo": lo, "hi": hi}, dicts, t0), args)
    else:
        for r in reports:
            print(
                "n=%d singular=%d %s"
                % (r.n, r.checked, "ok" if not r.violations else "VIOLATIONS %s" % (r.violations,))
            )
    return CHECK_FAILED if any(r.violations for r in reports) else 0


def cmd_goodk(args) -> int:
    t0 = time.perf_counter()
    n = args.n
    if gcd(n, 6) != 1:
        print("error: n must be coprime to 6", file=sys.stderr)
        return USAGE_ERROR
    reports = []
    k = 1
    while 6 * k < n:
        reports.append(good_report(k, n))
        k *= 2
    records = [asdict(r) for r in reports]
    params = {"n": n}
    if n > 24:
        dp = descent_params(n)
        params.update({"b": dp.b, "k_star": dp.k_star, "chain": list(dp.chain), "final_bound": dp.final_bound})
    if args.json:
        _emit(_report("goodk", params, records, t0), args)
    else:
        for r in reports:
            print("k=%d f=%d F=%d good=%s" % (r.k, r.f_k, r.F_k, r.good))
        if n > 24:
            print("b=%d k_star=%d final_bound=%d" % (params["b"], params["k_star"], params["final_bound"]))
    return 0


def cmd_witness(args) -> int:
    t0 = time.perf_counter()
    try:
        hit = interval_witness(args.n, args.form)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    rec = {"n": args.n, "form": args.form}
    if hit is None:
        rec.update({"g": None, "count": None})
        msg = "n=%d form=%d: no unit in the interval" % (args.n, args.form)
    else:
        rec.update({"g": hit[0], "count": hit[1]})
        msg = "n=%d form=%d g=%d count=%d" % (args.n, args.form, hit[0], hit[1])
    if args.json:
        _emit(_report("witness", {"n": args.n, "form": args.form}, [rec], t0), args)
    else:
        print(msg)
    return 0


def cmd_enumerate(args) -> int:
    t0 = time.perf_counter()
    try:
        seqs = [list(s.elems) for s in enumerate_minimal(args.n, orbits_only=args.orbits_only)]
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    if args.json:
        _emit(_report("enumerate", {"n": args.n, "orbits_only": args.orbits_only}, seqs, t0), args)
    else:
        for s in seqs:
            print(" ".join(str(x) for x in s))
        print("%d sequences" % len(seqs))
    return 0


def cmd_primes_check(args) -> int:
    t0 = time.perf_counter()
    try:
        failures = check_prime_intervals(args.max)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    records = [{"N": n, "interval": which} for n, which in failures]
    if args.json:
        _emit(_report("primes-check", {"max": args.max}, records, t0), args)
    else:
        if failures:
            for n, which in failures:
                print("FAIL N=%d interval %s" % (n, which))
        else:
            print("both prime-interval facts hold for all N in [2, %d]" % args.max)
    return CHECK_FAILED if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsindex",
        description="Exact index computation and exhaustive verification for "
        "minimal zero-sum length-4 sequences over cyclic groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="index of one sequence, with witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", type=str, required=True, help="comma-separated elements")
    p.add_argument("--full", action="store_true", help="print the full norm table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("verify", help="verify a modulus or range exhaustively")
    p.add_argument("--n", type=int)
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--checkpoint", type=str, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("singular", help="check every singular sequence has index 1")
    p.add_argument("--n", type=int)
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("goodk", help="good-k table and descent bounds for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_goodk)

    p = sub.add_parser("witness", help="unit witness in (n/12, n/8) for an explicit form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", type=int, choices=(6, 4), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", help="list minimal sequences over Z/n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--orbits-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("primes-check", help="sweep both prime-interval facts")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_primes_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
