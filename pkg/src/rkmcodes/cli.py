"""Command-line interface.

Exit codes: 0 pass, 1 a check failed, 2 usage error or refused budget.
"""

from __future__ import annotations

import argparse
import os
import sys

from .binary import BudgetExceeded, extremal_bound, is_type_II, profile
from .constructions import SpecError, parse_construction, parse_spec_file
from .fixtures import reproduce, resolve_table
from .gray import gray_code
from .lifts import EXHAUSTIVE_LIMIT, LiftSearchSpec, format_report, search
from .ring import RingError, RingParams, format_poly, inverse_int, mul_int, parse_poly

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(k: int, m: int) -> RingParams:
    try:
        return RingParams(k, m)
    except RingError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# -- ring utilities -------------------------------------------------------------


def cmd_ring_info(args) -> int:
    p = _params(args.k, args.m)
    print(f"ring: {p}")
    print(f"size: {p.size}")
    print(f"units: {p.size // 2}")
    sample = list(range(min(p.size, 8)))
    print("sample products (encoded):")
    print("   * " + " ".join(f"{b:>3d}" for b in sample))
    for a in sample:
        print(f"{a:>4d} " + " ".join(f"{mul_int(p, a, b):>3d}" for b in sample))
    print("sample inverses:")
    for a in sample:
        if a & 1:
            print(f"  ({format_poly(p, a)})^-1 = {format_poly(p, inverse_int(p, a))}")
    return OK


def cmd_encode(args) -> int:
    p = _params(args.k, args.m)
    try:
        print(parse_poly(p, args.poly))
    except RingError as exc:
        raise UsageError(str(exc)) from None
    return OK


def cmd_decode(args) -> int:
    p = _params(args.k, args.m)
    if not 0 <= args.value < p.size:
        raise UsageError(f"{args.value} is not an element of {p} (0..{p.size - 1})")
    print(format_poly(p, args.value))
    return OK


# -- constructions --------------------------------------------------------------


def _load_specs(path: str) -> list:
    try:
        return parse_spec_file(_read(path))
    except SpecError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _bits(word: int, n: int) -> str:
    return "".join(str((word >> i) & 1) for i in range(n))


def cmd_construct(args) -> int:
    for c in _load_specs(args.specfile):
        G = c.generator()
        B = gray_code(c.code())
        print(f"# {c.to_line()}")
        print(f"generator over {c.params} ({G.shape[0]}x{G.shape[1]}):")
        print(G)
        print(f"Gray image generator ({B.dimension}x{B.n}):")
        for row in B.basis:
            print(_bits(row, B.n))
        print()
    return OK


def cmd_check(args) -> int:
    status = OK
    for c in _load_specs(args.specfile):
        print(f"# {c.to_line()}")
        sd = c.is_self_dual()
        B = gray_code(c.code())
        bsd = B.is_self_dual()
        print(f"A A^t = I: {sd}")
        print(f"Gray image: [{B.n},{B.dimension}] self-dual: {bsd}")
        if not (sd and bsd):
            status = FAILED
        if B.dimension == 0:
            continue
        if bsd:
            print(f"type: {'II' if is_type_II(B) else 'I'}")
        if B.dimension <= 20 or args.extended or args.algorithm == "exhaustive":
            d = B.min_distance(algorithm=args.algorithm)
            print(f"d: {d}")
            if B.dimension <= 20:
                W = B.weight_enumerator()
                print(f"W: {W}")
                if args.csv:
                    sys.stdout.write(W.to_csv())
            if bsd:
                prof = profile(B, d=d)
                print(f"family: {prof.family}")
                for key in ("beta", "gamma", "alpha"):
                    val = getattr(prof, key)
                    if val is not None:
                        print(f"{key}: {val}")
        else:
            target = extremal_bound(B.n, "II" if bsd and is_type_II(B) else "I") if bsd else None
            lower, upper = B.distance_bounds(lower_target=target)
            print(f"d bounds: {lower} <= d <= {upper}  (use --extended for exact d and family)")
    return status


# -- tables ---------------------------------------------------------------------


def cmd_reproduce(args) -> int:
    try:
        tid = resolve_table(args.table)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.extended:
        print("extended mode: exact distance and low-weight census per row (seconds per row)", file=sys.stderr)
    reports = reproduce(tid, extended=args.extended, workers=args.threads)
    for rep in reports:
        print(rep.line())
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} rows pass")
    return FAILED if failed else OK


def cmd_macwilliams(args) -> int:
    from .macwilliams import selftest

    if args.action != "selftest":
        raise UsageError(f"unknown macwilliams action {args.action!r}")
    results = selftest(args.count, args.seed)
    bad = 0
    for code, a, b, c in results:
        if not (a and b and c):
            bad += 1
            print(f"FAIL {code!r} cwe={a} hamming={b} lee={c}")
    print(f"{len(results) - bad}/{len(results)} codes satisfy all three identities")
    return FAILED if bad else OK


# -- lift search ----------------------------------------------------------------

_LIFT_KEYS = ("seed", "ring", "strategy", "samples", "seed-value", "d-target", "budget")


def parse_lift_spec(text: str) -> LiftSearchSpec:
    """``key: value`` lines; ``seed`` is a binary construction line."""
    vals = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in _LIFT_KEYS:
            raise SpecError(f"line {no}: expected one of {', '.join(_LIFT_KEYS)} followed by ':'")
        try:
            if key == "seed":
                vals[key] = parse_construction(val)
            elif key == "ring":
                k, m = val.split()
                vals[key] = RingParams(int(k), int(m))
            elif key == "strategy":
                vals[key] = val.strip()
            else:
                vals[key] = int(val)
        except (ValueError, SpecError) as exc:
            raise SpecError(f"line {no}: {exc}") from None
    for key in ("seed", "ring"):
        if key not in vals:
            raise SpecError(f"missing '{key}:' line")
    try:
        return LiftSearchSpec(
            seed=vals["seed"],
            params=vals["ring"],
            strategy=vals.get("strategy", "exhaustive"),
            samples=vals.get("samples", 1000),
            seed_value=vals.get("seed-value", 0),
            d_target=vals.get("d-target"),
            budget=vals.get("budget", EXHAUSTIVE_LIMIT),
        )
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def cmd_search(args) -> int:
    try:
        spec = parse_lift_spec(_read(args.liftspecfile))
    except SpecError as exc:
        raise UsageError(f"{args.liftspecfile}: {exc}") from None
    if args.seed is not None:
        spec.seed_value = args.seed
    buckets = search(spec, workers=args.threads)
    print(format_report(buckets))
    print(f"{sum(len(b.results) for b in buckets)} hits in {len(buckets)} classes")
    return OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rkmcodes", description="Codes over R_{k,m} and their Gray images.")
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes")
    sub = ap.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="ring utilities")
    rsub = ring.add_subparsers(dest="action", required=True)
    info = rsub.add_parser("info", help="size, units and a sample table")
    info.add_argument("k", type=int)
    info.add_argument("m", type=int)
    info.set_defaults(func=cmd_ring_info)

    enc = sub.add_parser("encode", help="polynomial string -> integer")
    enc.add_argument("poly")
    dec = sub.add_parser("decode", help="integer -> polynomial string")
    dec.add_argument("value", type=int)
    for p, f in ((enc, cmd_encode), (dec, cmd_decode)):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--m", type=int, default=1)
        p.set_defaults(func=f)

    con = sub.add_parser("construct", help="print generator and Gray image")
    con.add_argument("specfile")
    con.set_defaults(func=cmd_construct)

    chk = sub.add_parser("check", help="self-duality, Type, distance and family")
    chk.add_argument("specfile")
    chk.add_argument("--algorithm", choices=("exhaustive", "information-set"), default="information-set")
    chk.add_argument("--extended", action="store_true", help="exact d and family for large codes")
    chk.add_argument("--csv", action="store_true", help="also print the weight enumerator as CSV")
    chk.set_defaults(func=cmd_check)

    rep = sub.add_parser("reproduce", help="check every row of a published table")
    rep.add_argument("table", help="golay, t1..t8")
    rep.add_argument("--extended", action="store_true")
    rep.set_defaults(func=cmd_reproduce)

    mw = sub.add_parser("macwilliams", help="MacWilliams identity suite")
    mw.add_argument("action", choices=("selftest",))
    mw.add_argument("--count", type=int, default=100)
    mw.add_argument("--seed", type=int, default=0)
    mw.set_defaults(func=cmd_macwilliams)

    srch = sub.add_parser("search", help="filtered lift search")
    srch.add_argument("liftspecfile")
    srch.add_argument("--seed", type=int, default=None, help="overrides seed-value")
    srch.set_defaults(func=cmd_search)
    for p in (rep, srch):
        p.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
