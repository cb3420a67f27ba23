"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

import itertools
import random
import sys
import time

import pytest

from rkmcodes.binary import BinaryCode, is_type_II, rank
from rkmcodes.fixtures import GOLAY_WE, check_row, load_table
from rkmcodes.gray import check_gray_duality, gray_code
from rkmcodes.lifts import check_distance_bound
from rkmcodes.macwilliams import random_codes, selftest
from rkmcodes.rcodes import RingCode, RingMatrix, is_self_dual_free
from rkmcodes.ring import RingElement, RingParams, mul_int

SUITE_RINGS = [RingParams(2, 1), RingParams(2, 2), RingParams(3, 1), RingParams(3, 2)]


def brute_weights(code: BinaryCode) -> dict:
    """Independent 2^k enumeration over all message vectors."""
    counts = {}
    for bits in itertools.product((0, 1), repeat=code.dimension):
        w = 0
        for b, r in zip(bits, code.basis):
            if b:
                w ^= r
        counts[w.bit_count()] = counts.get(w.bit_count(), 0) + 1
    return counts


def criterion_1():
    t0 = time.perf_counter()
    reps = [check_row(r) for r in load_table("golay")]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reps)
    for r in load_table("golay"):
        B = gray_code(r.construction.code())
        ok &= (B.n, B.dimension) == (24, 12) and is_type_II(B)
        ok &= brute_weights(B) == GOLAY_WE
    ok &= elapsed < 1.0
    return ok, f"M and M' give [24,12,8] Type II, W matches the 2^12 oracle, {elapsed:.2f}s"


def criterion_2():
    worst, bad = 0.0, []
    a8 = {"W36_1": 225, "W36_2": 289}
    for tid in ("t1", "t2", "t3"):
        for row in load_table(tid):
            t0 = time.perf_counter()
            rep = check_row(row)
            W = gray_code(row.construction.code()).weight_enumerator()
            worst = max(worst, time.perf_counter() - t0)
            fam = row.expect["family"]
            if not (rep.passed and W[8] == a8[fam] and W.min_nonzero_weight() == 8 and W.total == 1 << 18):
                bad.append(f"{tid}:{row.row_id}")
    ok = not bad and worst < 10
    return ok, f"10 rows, worst {worst:.2f}s/row" + (f", failing {bad}" if bad else "")


def criterion_3():
    rows = load_table("t4")
    t0 = time.perf_counter()
    default = [check_row(r) for r in rows]
    t_default = time.perf_counter() - t0
    ok = all(r.passed for r in default) and t_default < 60
    ok &= all(r.construction.project().is_self_dual() for r in rows)
    ok &= all(not is_type_II(gray_code(r.construction.code())) for r in rows)
    ext = [check_row(r, extended=True) for r in rows]
    ok &= all(r.passed for r in ext)
    betas = sorted(int(r.row.expect["beta"]) for r in ext)
    ok &= betas == [22, 66]
    return ok, f"default {t_default:.2f}s, extended d=12 and beta in {betas}"


def criterion_4():
    bad, worst, n = [], 0.0, 0
    for tid in ("t5", "t6", "t8"):
        for row in load_table(tid):
            n += 1
            t0 = time.perf_counter()
            B = gray_code(row.construction.code())
            good = (
                row.construction.is_self_dual()
                and B.n == 72
                and B.is_self_dual()
                and all(b.bit_count() % 4 == 0 for b in B.rows)
            )
            worst = max(worst, time.perf_counter() - t0)
            if not good:
                bad.append(f"{tid}:{row.row_id}")
    spot = []
    for tid in ("t5", "t6", "t8"):
        rows = load_table(tid)
        for row in (rows[0], rows[len(rows) // 2], rows[-1]):
            rep = check_row(row, extended=True)
            if not rep.passed:
                spot.append(f"{tid}:{row.row_id}")
    ok = not bad and not spot and worst < 1.0
    detail = f"{n - len(bad)}/{n} rows self-dual doubly-even, worst {worst:.2f}s/row, 9 extended spot checks"
    if bad:
        detail += f"; not self-dual as printed: {', '.join(bad)}"
    if spot:
        detail += f"; spot-check failures: {', '.join(spot)}"
    return ok, detail


def criterion_5():
    t0 = time.perf_counter()
    results = selftest(100, seed=0)
    elapsed = time.perf_counter() - t0
    rings = {code.params for code, *_ in results}
    good = sum(all(r[1:]) for r in results)
    ok = good == len(results) >= 100 and rings == set(SUITE_RINGS) and elapsed < 300
    ok &= all(c.params.nbits * c.n <= 16 for c, *_ in results)
    return ok, f"{good}/{len(results)} codes, cwe+hamming+lee exact, {elapsed:.1f}s"


def criterion_6():
    codes = list(random_codes(60, seed=101, max_bits=14))
    good = sum(check_gray_duality(c) for c in codes)
    return good == len(codes) >= 50, f"{good}/{len(codes)} codes: phi(C^perp) == phi(C)^perp"


def criterion_7():
    bad, total = [], 0
    for k in range(1, 13):
        for m in range(1, k + 1):
            if k * m > 12:
                continue
            p = RingParams(k, m)
            units = 0
            for a in range(p.size):
                # invertible iff x -> a x is a bijection (full GF(2) rank)
                cols = [mul_int(p, a, 1 << i) for i in range(p.nbits)]
                inv = rank(cols, p.nbits) == p.nbits
                unit = RingElement(p, a).is_unit()
                if unit != inv:
                    bad.append((k, m, a))
                if unit:
                    units += 1
                    if mul_int(p, a, RingElement(p, a).inverse().value) != 1:
                        bad.append((k, m, a))
            if units != 1 << (p.nbits - 1):
                bad.append((k, m, "count"))
            total += 1
    return not bad, f"{total} rings with km <= 12, units = 2^(km-1)" + (f", mismatches {bad[:3]}" if bad else "")


def _random_self_dual(rng, count):
    seeds = [
        load_table("golay")[0].construction.project(),
        load_table("t2")[0].construction.project(),
    ]
    out = []
    while len(out) < count:
        seed = rng.choice(seeds)
        p = rng.choice(SUITE_RINGS)
        vals = [rng.randrange(1, p.size, 2) if a else rng.randrange(0, p.size, 2) for a in seed.entries]
        c = seed.with_entries(vals, p)
        if c.is_self_dual():
            out.append(c.code())
    return out


def criterion_8():
    rng = random.Random(8)
    codes = [r.construction.code() for t in ("golay", "t1", "t2", "t3", "t4", "t5", "t6", "t8") for r in load_table(t)]
    n_fix = len(codes)
    codes += _random_self_dual(rng, 40)
    res = [check_distance_bound(c) for c in codes]
    ok = all(r is True for r in res)
    return ok, f"{n_fix} fixtures + {len(codes) - n_fix} random self-dual lifts satisfy d_L <= 2m d'"


def _orthogonal(p, n, rng):
    invol = [a for a in range(1, p.size, 2) if mul_int(p, a, a) == 1]
    perm = rng.sample(range(n), n)
    return [[rng.choice(invol) if j == perm[i] else 0 for j in range(n)] for i in range(n)]


def criterion_9():
    rng = random.Random(9)
    mismatches, checked, positives = 0, 0, 0
    for p in SUITE_RINGS:
        n = 16 // (2 * p.nbits)
        for t in range(25):
            if t % 2:
                A = _orthogonal(p, n, rng)
            else:
                A = [[rng.randrange(p.size) for _ in range(n)] for _ in range(n)]
            G = RingMatrix.identity(p, n).hstack(RingMatrix(p, A))
            alg = is_self_dual_free(G)
            positives += alg
            mismatches += alg != RingCode(p, G).is_self_dual_bruteforce()
            checked += 1
    dist_bad, dist_n = [], 0
    for tid in ("golay", "t1", "t2", "t3"):
        for row in load_table(tid):
            B = gray_code(row.construction.code())
            if B.dimension <= 18:
                dist_n += 1
                if B.min_distance("exhaustive") != B.min_distance("information-set"):
                    dist_bad.append(row.row_id)
    ok = mismatches == 0 and positives > 0 and not dist_bad and dist_n > 0
    return ok, (
        f"is_self_dual_free == brute force on {checked} codes ({positives} self-dual); "
        f"exhaustive == information-set d on {dist_n} fixtures"
    )


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


def _report(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", range(1, 10))
def test_criterion(i, capsys):
    ok, detail = CRITERIA[i - 1]()
    with capsys.disabled():
        print("\n" + _report(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(_report(i, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
