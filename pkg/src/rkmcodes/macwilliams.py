"""Generating character, T-matrix and exact MacWilliams identities over R_{k,m}.

Ring elements are indexed by their encoding, so g_i = decode(i) and the zero
element is g_0.  All polynomial arithmetic is on Python/numpy integers; the
division by |C| must be exact or the identity is reported as failing.
"""

from __future__ import annotations

import random
from collections import Counter
from math import comb
from typing import Iterator, Optional

import numpy as np

from .binary import BudgetExceeded
from .gray import lee_weight
from .rcodes import DEFAULT_BUDGET, RingCode
from .ring import RingParams, mul_int

MAX_ALPHABET = 64


def character(p: RingParams, a) -> int:
    """chi(a) = (-1)^(number of nonzero coefficients)."""
    return -1 if int(a).bit_count() & 1 else 1


def character_table(p: RingParams) -> np.ndarray:
    """T[i][j] = chi(g_i g_j)."""
    if p.size > 1 << 12:
        raise BudgetExceeded("character table limited to |R| <= 4096")
    q = p.size
    T = np.empty((q, q), dtype=np.int64)
    for i in range(q):
        for j in range(i, q):
            T[i, j] = T[j, i] = character(p, mul_int(p, i, j))
    return T


# -- enumerators --------------------------------------------------------------


def cwe(code: RingCode, budget: int = DEFAULT_BUDGET) -> Counter:
    """Complete weight enumerator: composition (n_0, ..., n_{q-1}) -> count."""
    q = code.params.size
    if q > MAX_ALPHABET:
        raise BudgetExceeded(f"complete enumerator needs |R| <= {MAX_ALPHABET}")
    out = Counter()
    for c in code.codewords(budget):
        comp = [0] * q
        for a in c:
            comp[a] += 1
        out[tuple(comp)] += 1
    return out


def hamming_enumerator(code: RingCode, budget: int = DEFAULT_BUDGET) -> list:
    """A_w = number of codewords with w nonzero coordinates, w = 0..n."""
    A = [0] * (code.n + 1)
    for c in code.codewords(budget):
        A[sum(1 for a in c if a)] += 1
    return A


def lee_enumerator(code: RingCode, budget: int = DEFAULT_BUDGET) -> list:
    """L_w = number of codewords of Lee weight w, w = 0..kmn."""
    p = code.params
    L = [0] * (p.nbits * code.n + 1)
    for c in code.codewords(budget):
        L[lee_weight(p, c)] += 1
    return L


def cwe_to_hamming(comp_counts: Counter, n: int) -> list:
    """Specialise X_0 = x, X_i = y (i >= 1)."""
    A = [0] * (n + 1)
    for comp, cnt in comp_counts.items():
        A[n - comp[0]] += cnt
    return A


# -- univariate helpers (coefficient lists, index = power) ---------------------


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ppow(a: list, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = _pmul(out, a)
    return out


def _exact_div(values: list, d: int) -> list:
    out = []
    for v in values:
        qv, r = divmod(v, d)
        if r:
            raise ArithmeticError(f"coefficient {v} not divisible by |C| = {d}")
        out.append(qv)
    return out


def hamming_transform(A: list, n: int, q: int) -> list:
    """(1/|C|) W_C(x + (q-1)y, x - y) as coefficients of x^(n-j) y^j."""
    size = sum(A)
    total = [0] * (n + 1)
    for w, a in enumerate(A):
        if not a:
            continue
        term = _pmul(_ppow([1, q - 1], n - w), _ppow([1, -1], w))
        for j, c in enumerate(term):
            total[j] += a * c
    return _exact_div(total, size)


def lee_transform(L: list, N: int) -> list:
    """(1/|C|) sum_c (1 - z)^wL(c) (1 + z)^(N - wL(c))."""
    size = sum(L)
    total = [0] * (N + 1)
    for w, a in enumerate(L):
        if not a:
            continue
        term = _pmul(_ppow([1, -1], w), _ppow([1, 1], N - w))
        for j, c in enumerate(term):
            total[j] += a * c
    return _exact_div(total, size)


def krawtchouk_transform(A: list, n: int) -> list:
    """Binary MacWilliams via Krawtchouk sums; same result as q = 2 above."""
    size = sum(A)
    out = []
    for j in range(n + 1):
        s = 0
        for w, a in enumerate(A):
            if a:
                s += a * sum((-1) ** t * comb(w, t) * comb(n - w, j - t) for t in range(0, j + 1))
        out.append(s)
    return _exact_div(out, size)


# -- complete enumerator transform ---------------------------------------------


def cwe_transform(comp_counts: Counter, p: RingParams, n: int, size: Optional[int] = None) -> Counter:
    """(1/|C|) cwe_C(T X^t), expanded exactly.

    Each composition contributes count * prod_i L_i^{n_i} with
    L_i = sum_j T[i][j] X_j.  The products are accumulated as a dense order-n
    tensor over monomial index sequences and then collected by composition.
    """
    q = p.size
    if q**n > 1 << 20:
        raise BudgetExceeded(f"|R|^n = {q**n} too large for the tensor expansion")
    T = character_table(p)
    M = np.zeros((q,) * n, dtype=np.int64)
    for comp, cnt in comp_counts.items():
        seq = tuple(i for i, c in enumerate(comp) for _ in range(c))
        M[seq] += cnt
    S = M
    for axis in range(n):
        # substitute X_i -> sum_j T[i][j] X_j along this tensor axis
        S = np.moveaxis(np.tensordot(S, T, axes=([axis], [0])), -1, axis)
    idx = np.indices((q,) * n).reshape(n, -1).T
    keys = np.sort(idx, axis=1)
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    coeff = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(coeff, inverse.ravel(), S.ravel())
    size = sum(comp_counts.values()) if size is None else size
    out = Counter()
    for key, c in zip(uniq, coeff):
        c = int(c)
        if not c:
            continue
        qv, r = divmod(c, size)
        if r:
            raise ArithmeticError(f"coefficient {c} not divisible by |C| = {size}")
        comp = [0] * q
        for i in key:
            comp[int(i)] += 1
        out[tuple(comp)] = qv
    return out


# -- verifications ------------------------------------------------------------


def _check_size(code: RingCode):
    if code.params.nbits * code.n > 16:
        raise BudgetExceeded("MacWilliams verification needs km*n <= 16")


def verify_macwilliams_cwe(code: RingCode) -> bool:
    _check_size(code)
    dual = code.brute_force_dual()
    try:
        lhs = cwe_transform(cwe(code), code.params, code.n)
    except ArithmeticError:
        return False
    return lhs == cwe(dual)


def verify_macwilliams_hamming(code: RingCode) -> bool:
    _check_size(code)
    dual = code.brute_force_dual()
    try:
        lhs = hamming_transform(hamming_enumerator(code), code.n, code.params.size)
    except ArithmeticError:
        return False
    return lhs == hamming_enumerator(dual)


def verify_macwilliams_lee(code: RingCode) -> bool:
    _check_size(code)
    dual = code.brute_force_dual()
    N = code.params.nbits * code.n
    try:
        lhs = lee_transform(lee_enumerator(code), N)
    except ArithmeticError:
        return False
    return lhs == lee_enumerator(dual)


def format_terms(comp_counts: Counter) -> str:
    """Sorted term list, e.g. ``1*X0^2 + 3*X0*X2``."""
    terms = []
    for comp in sorted(comp_counts, reverse=True):
        factors = []
        for i, e in enumerate(comp):
            if e:
                factors.append(f"X{i}" if e == 1 else f"X{i}^{e}")
        terms.append(f"{comp_counts[comp]}*{'*'.join(factors) or '1'}")
    return " + ".join(terms)


# -- randomized suite ---------------------------------------------------------

SUITE_RINGS = ((2, 1), (2, 2), (3, 1), (3, 2))


def random_codes(count: int, seed: int = 0, max_bits: int = 16) -> Iterator[RingCode]:
    """Deterministic stream of small codes with km*n <= max_bits.

    Rings cycle through R_{2,1}, R_{2,2}, R_{3,1}, R_{3,2}; each code is
    spanned by 1..n random vectors.
    """
    rng = random.Random(seed)
    for i in range(count):
        p = RingParams(*SUITE_RINGS[i % len(SUITE_RINGS)])
        n = rng.randint(1, max_bits // p.nbits)
        gens = [[rng.randrange(p.size) for _ in range(n)] for _ in range(rng.randint(1, n))]
        yield RingCode(p, gens, n=n)


def selftest(count: int = 100, seed: int = 0) -> list:
    """Run all three identities on ``random_codes``; list of (code, cwe, hamming, lee)."""
    out = []
    for code in random_codes(count, seed):
        out.append(
            (code, verify_macwilliams_cwe(code), verify_macwilliams_hamming(code), verify_macwilliams_lee(code))
        )
    return out
