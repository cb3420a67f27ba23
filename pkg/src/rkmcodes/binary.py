"""Binary linear codes on int bitsets.

Rows are Python ints with column c at bit c.  Bulk enumeration switches to
numpy arrays of 64-bit limbs, row-major, with ``np.bitwise_count`` as the
weight kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Optional

import numpy as np

EXHAUSTIVE_MAX_DIM = 30
INFOSET_MAX_DIM = 40
_CHUNK = 1 << 21


class BudgetExceeded(RuntimeError):
    pass


class NotSelfDual(ValueError):
    pass


class ParameterError(ValueError):
    pass


# -- GF(2) linear algebra -----------------------------------------------------


def rref(rows: Iterable[int], n: int, column_order: Optional[Iterable[int]] = None):
    """Reduced row echelon form.

    Returns ``(basis, pivots)``; pivots are chosen by scanning columns in
    ``column_order`` (default 0..n-1), so basis[i] is the unique row with a 1
    in column pivots[i].
    """
    work = [r for r in rows if r]
    basis, pivots = [], []
    order = range(n) if column_order is None else column_order
    for col in order:
        bit = 1 << col
        hit = None
        for idx, r in enumerate(work):
            if r & bit:
                hit = idx
                break
        if hit is None:
            continue
        piv = work.pop(hit)
        work = [r ^ piv if r & bit else r for r in work]
        work = [r for r in work if r]
        basis = [b ^ piv if b & bit else b for b in basis]
        basis.append(piv)
        pivots.append(col)
        if not work:
            break
    return basis, pivots


def rank(rows: Iterable[int], n: int) -> int:
    return len(rref(rows, n)[0])


def nullspace(rows: Iterable[int], n: int) -> list:
    """Basis of {x : <x, r> = 0 for every row r}."""
    basis, pivots = rref(rows, n)
    pivset = set(pivots)
    out = []
    for f in range(n):
        if f in pivset:
            continue
        vec = 1 << f
        for b, pcol in zip(basis, pivots):
            if (b >> f) & 1:
                vec |= 1 << pcol
        out.append(vec)
    return out


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def to_limbs(words: Iterable[int], n: int) -> np.ndarray:
    L = max(1, (n + 63) // 64)
    words = list(words)
    out = np.zeros((len(words), L), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, w in enumerate(words):
        for j in range(L):
            out[i, j] = (w >> (64 * j)) & mask
    return out


def from_limbs(arr: np.ndarray) -> list:
    out = []
    for row in arr:
        v = 0
        for j, limb in enumerate(row):
            v |= int(limb) << (64 * j)
        out.append(v)
    return out


def _weights(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).sum(axis=-1, dtype=np.int64)


def gray_code_table(rows: list, n: int) -> np.ndarray:
    """All 2^len(rows) combinations, in reflected Gray-code order.

    Entry i and i+1 differ by exactly one generator row.
    """
    table = np.zeros((1, max(1, (n + 63) // 64)), dtype=np.uint64)
    limbs = to_limbs(rows, n)
    for r in limbs:
        table = np.concatenate([table, table[::-1] ^ r])
    return table


def _xor_combinations(rows: np.ndarray, w: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """Yield XORs of every w-subset of ``rows`` in bounded-size blocks."""
    k = len(rows)
    if w == 0:
        yield np.zeros((1, rows.shape[1]), dtype=np.uint64)
        return
    if w > k:
        return

    def expand(vals, last, depth):
        counts = np.maximum(0, (k - (w - depth)) - last)
        total = int(counts.sum())
        if total == 0:
            return
        if total > chunk and len(vals) > 1:
            csum = np.cumsum(counts)
            start = 0
            while start < len(vals):
                base = csum[start - 1] if start else 0
                stop = int(np.searchsorted(csum, base + chunk, side="right"))
                stop = max(stop, start + 1)
                yield from expand(vals[start:stop], last[start:stop], depth)
                start = stop
            return
        offs = np.repeat(np.cumsum(counts) - counts, counts)
        nxt = np.repeat(last + 1, counts) + (np.arange(total) - offs)
        new_vals = np.repeat(vals, counts, axis=0) ^ rows[nxt]
        if depth + 1 == w:
            yield new_vals
        else:
            yield from expand(new_vals, nxt, depth + 1)

    start_vals = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    yield from expand(start_vals, np.array([-1]), 0)


# -- enumerators --------------------------------------------------------------


@dataclass
class WeightEnumerator:
    """Sparse weight -> count map of a code of length n."""

    n: int
    counts: dict = field(default_factory=dict)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def is_symmetric(self) -> bool:
        return all(self[self.n - w] == c for w, c in self.counts.items())

    def as_list(self) -> list:
        return [self[w] for w in range(self.n + 1)]

    def prefix(self, upto: int) -> tuple:
        return tuple(self[w] for w in range(upto + 1))

    def min_nonzero_weight(self) -> Optional[int]:
        ws = [w for w, c in self.counts.items() if w > 0 and c]
        return min(ws) if ws else None

    def to_csv(self) -> str:
        lines = ["weight,count"]
        lines += [f"{w},{c}" for w, c in sorted(self.counts.items()) if c]
        return "\n".join(lines) + "\n"

    def __str__(self):
        terms = []
        for w, c in sorted(self.counts.items()):
            if not c:
                continue
            coef = "" if c == 1 else str(c)
            terms.append(str(c) if w == 0 else f"{coef}y" if w == 1 else f"{coef}y^{w}")
        return " + ".join(terms)

    @classmethod
    def from_list(cls, values) -> "WeightEnumerator":
        return cls(len(values) - 1, {w: int(c) for w, c in enumerate(values) if c})


# -- codes --------------------------------------------------------------------


class BinaryCode:
    """Binary linear code of length n given by (possibly dependent) rows."""

    def __init__(self, n: int, rows: Iterable[int]):
        self.n = n
        rows = list(rows)
        if any(r >> n for r in rows):
            raise ValueError("row longer than code length")
        self.rows = rows
        self.basis, self.pivots = rref(rows, n)

    @classmethod
    def from_matrix(cls, matrix) -> "BinaryCode":
        matrix = [list(map(int, r)) for r in matrix]
        n = len(matrix[0]) if matrix else 0
        rows = [sum(b << i for i, b in enumerate(r)) for r in matrix]
        return cls(n, rows)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def __repr__(self):
        return f"BinaryCode([{self.n},{self.dimension}])"

    def contains(self, word: int) -> bool:
        for b, p in zip(self.basis, self.pivots):
            if (word >> p) & 1:
                word ^= b
        return word == 0

    def dual(self) -> "BinaryCode":
        return BinaryCode(self.n, nullspace(self.basis, self.n))

    def is_self_orthogonal(self) -> bool:
        B = self.basis
        return all(dot(B[i], B[j]) == 0 for i in range(len(B)) for j in range(i, len(B)))

    def is_self_dual(self) -> bool:
        return 2 * self.dimension == self.n and self.is_self_orthogonal()

    def is_doubly_even(self) -> bool:
        """All weights divisible by 4 (via self-orthogonality + row weights)."""
        return self.is_self_orthogonal() and all(b.bit_count() % 4 == 0 for b in self.basis)

    def weight_divisor(self) -> int:
        if self.is_doubly_even():
            return 4
        if all(b.bit_count() % 2 == 0 for b in self.basis):
            return 2
        return 1

    def codewords(self) -> Iterator[int]:
        """All codewords in Gray-code order (one row XOR per step)."""
        if self.dimension > 26:
            raise BudgetExceeded(f"dimension {self.dimension} too large to list")
        word = 0
        yield word
        for i in range(1, self.size):
            word ^= self.basis[(i & -i).bit_length() - 1]
            yield word

    def weight_enumerator(self, max_dim: int = EXHAUSTIVE_MAX_DIM) -> WeightEnumerator:
        """Exact Hamming weight distribution by full enumeration.

        The message space is split in two halves; each half is tabulated in
        Gray-code order and the codewords are the pairwise XORs.
        """
        k = self.dimension
        if k > max_dim:
            raise BudgetExceeded(f"dimension {k} exceeds enumeration limit {max_dim}")
        a = k // 2
        t1 = gray_code_table(self.basis[:a], self.n)
        t2 = gray_code_table(self.basis[a:], self.n)
        hist = np.zeros(self.n + 1, dtype=np.int64)
        step = max(1, _CHUNK // len(t2))
        for i in range(0, len(t1), step):
            block = t1[i : i + step, None, :] ^ t2[None, :, :]
            hist += np.bincount(_weights(block).ravel(), minlength=self.n + 1)
        return WeightEnumerator(self.n, {w: int(c) for w, c in enumerate(hist) if c})

    def information_sets(self) -> list:
        """Systematic generators for successive disjoint information sets.

        Returns a list of ``(rows, relative_rank)``; each rows list is the code
        in RREF w.r.t. pivots taken from not-yet-used columns first (leftmost).
        """
        remaining = list(range(self.n))
        out = []
        while remaining:
            used = set(remaining)
            order = remaining + [c for c in range(self.n) if c not in used]
            basis, pivots = rref(self.basis, self.n, order)
            new = [p for p in pivots if p in used]
            if not new:
                break
            out.append((basis, len(new)))
            newset = set(new)
            remaining = [c for c in remaining if c not in newset]
        return out

    def distance_bounds(
        self,
        max_weight: Optional[int] = None,
        stop_below: Optional[int] = None,
        lower_target: Optional[int] = None,
    ) -> tuple:
        """Brouwer-Zimmermann style (lower, upper) bounds on the minimum distance.

        Message weights w = 1, 2, ... are enumerated in every systematic
        generator until the bounds meet.  Stops early when a codeword of
        weight < ``stop_below`` is found, when the lower bound reaches
        ``lower_target``, or after ``max_weight``.
        """
        k = self.dimension
        if k == 0:
            raise ValueError("zero-dimensional code has no minimum distance")
        if k > INFOSET_MAX_DIM:
            raise BudgetExceeded(f"dimension {k} exceeds information-set limit {INFOSET_MAX_DIM}")
        div = self.weight_divisor()
        gens = [(to_limbs(rows, self.n), r) for rows, r in self.information_sets()]
        upper = min(b.bit_count() for b in self.basis)
        lower = 1
        for w in range(1, k + 1):
            for arr, _ in gens:
                for block in _xor_combinations(arr, w):
                    upper = min(upper, int(_weights(block).min()))
                if stop_below is not None and upper < stop_below:
                    return lower, upper
            raw = sum(max(0, w + 1 - (k - r)) for _, r in gens)
            lower = max(lower, -(-raw // div) * div)
            if lower >= upper:
                return upper, upper
            if lower_target is not None and lower >= lower_target:
                return lower, upper
            if max_weight is not None and w >= max_weight:
                break
        return lower, upper

    def min_distance(self, algorithm: str = "information-set", stop_below: Optional[int] = None) -> int:
        """Exact minimum distance.

        With ``stop_below`` the search may abort early; a returned value below
        ``stop_below`` is then only guaranteed to be the weight of some
        codeword, i.e. an upper bound.
        """
        if self.dimension == 0:
            raise ValueError("zero-dimensional code has no minimum distance")
        if algorithm == "exhaustive":
            return self.weight_enumerator().min_nonzero_weight()
        if algorithm != "information-set":
            raise ValueError(f"unknown algorithm {algorithm!r}")
        lower, upper = self.distance_bounds(stop_below=stop_below)
        return upper

    def low_weight_counts(self, max_weight: int) -> WeightEnumerator:
        """Exact A_w for all w <= max_weight without full enumeration.

        Enumerates message weights in every information set until the
        Brouwer-Zimmermann lower bound for unseen codewords exceeds
        ``max_weight``; codewords found more than once are deduplicated.
        """
        k = self.dimension
        if k > INFOSET_MAX_DIM:
            raise BudgetExceeded(f"dimension {k} exceeds information-set limit {INFOSET_MAX_DIM}")
        if k <= 20:
            we = self.weight_enumerator()
            return WeightEnumerator(self.n, {w: c for w, c in we.counts.items() if w <= max_weight})
        div = self.weight_divisor()
        gens = [(to_limbs(rows, self.n), r) for rows, r in self.information_sets()]
        found = []
        w = 0
        while True:
            raw = sum(max(0, w - (k - r)) for _, r in gens)
            # raw is the bound for words unseen after levels 0..w-1
            if -(-raw // div) * div > max_weight:
                break
            if w > k:
                break
            for arr, _ in gens:
                for block in _xor_combinations(arr, w):
                    sel = block[_weights(block) <= max_weight]
                    if len(sel):
                        found.append(sel)
            w += 1
        allw = np.unique(np.concatenate(found), axis=0)
        hist = np.bincount(_weights(allw), minlength=max_weight + 1)
        return WeightEnumerator(self.n, {i: int(c) for i, c in enumerate(hist) if c})


def is_type_II(code: BinaryCode) -> bool:
    if not code.is_self_dual():
        raise NotSelfDual(f"{code!r} is not self-dual")
    return all(b.bit_count() % 4 == 0 for b in code.rows if b) and all(
        b.bit_count() % 4 == 0 for b in code.basis
    )


def binary_dual(code: BinaryCode) -> BinaryCode:
    return code.dual()


def is_self_dual(code: BinaryCode) -> bool:
    return code.is_self_dual()


def extremal_bound(n: int, type_: str) -> int:
    """Upper bound on d for a binary self-dual code of length n."""
    base = 4 * (n // 24) + 4
    if type_ == "I" and n % 24 == 22:
        return base + 2
    return base


# -- weight-enumerator families ------------------------------------------------


@dataclass
class SelfDualProfile:
    n: int
    type: str  # "I", "II" or "not-self-dual"
    d: Optional[int] = None
    family: str = "other"
    beta: Optional[int] = None
    gamma: Optional[int] = None
    alpha: Optional[int] = None

    def describe(self) -> str:
        parts = [f"n: {self.n}", f"type: {self.type}"]
        if self.d is not None:
            parts.append(f"d: {self.d}")
        parts.append(f"family: {self.family}")
        for key in ("beta", "gamma", "alpha"):
            val = getattr(self, key)
            if val is not None:
                parts.append(f"{key}: {val}")
        return "\n".join(parts)


def extract_parameters(W: WeightEnumerator, n: int, type_: str) -> SelfDualProfile:
    """Place a weight enumerator into the published W_36/W_66/W_72 families.

    Needs W exact through weight 16 (through 10 for n = 36).  Raises
    ParameterError when no family is consistent.
    """
    d = W.min_nonzero_weight()
    prof = SelfDualProfile(n=n, type=type_, d=d)
    if n == 36:
        a8, a10 = W[8], W[10]
        if (a8, a10) == (225, 2016):
            prof.family = "W36_1"
        elif (a8, a10) == (289, 1632):
            prof.family = "W36_2"
        else:
            raise ParameterError(f"A_8={a8}, A_10={a10} match neither W36_1 nor W36_2")
        return prof
    if n == 66:
        a12, a14 = W[12], W[14]
        if (a12, a14) == (1690, 7990):
            prof.family = "W66_2"
            return prof
        if (a12 - 858) % 8:
            raise ParameterError(f"A_12={a12} is not 858 + 8*beta")
        beta = (a12 - 858) // 8
        if a14 == 18678 - 24 * beta and 0 <= beta <= 778:
            prof.family = "W66_1"
        elif a14 == 18166 - 24 * beta and 14 <= beta <= 756:
            prof.family = "W66_3"
        else:
            raise ParameterError(f"A_12={a12}, A_14={a14} match no W66 family")
        prof.beta = beta
        return prof
    if n == 72 and type_ == "II":
        alpha = W[12] - 4398
        if 16 in W.counts and W[16] != 197073 - 12 * alpha:
            raise ParameterError(f"A_16={W[16]} inconsistent with alpha={alpha}")
        prof.family = "W72_II"
        prof.alpha = alpha
        return prof
    if n == 72 and type_ == "I":
        a12, a14, a16 = W[12], W[14], W[16]
        if a12 % 2:
            raise ParameterError(f"A_12={a12} is odd")
        beta = a12 // 2
        hits = []
        for fam, c14, c16 in (("W72_1", 8640, 124281), ("W72_2", 7616, 134521)):
            if (c14 - a14) % 64:
                continue
            gamma = (c14 - a14) // 64
            if a16 == c16 - 24 * beta + 384 * gamma:
                hits.append((fam, gamma))
        if len(hits) != 1:
            raise ParameterError(f"A_12..A_16 = {a12},{a14},{a16} fit {len(hits)} W72 families")
        prof.family, prof.gamma = hits[0]
        prof.beta = beta
        return prof
    raise ParameterError(f"no published family for n={n}, type {type_}")


def profile(
    code: BinaryCode,
    d: Optional[int] = None,
    through: int = 16,
    W: Optional[WeightEnumerator] = None,
) -> SelfDualProfile:
    """Type, distance and family parameters of a binary code.

    ``W`` may carry precomputed low-weight counts; otherwise A_0..A_through
    are counted here.
    """
    if not code.is_self_dual():
        return SelfDualProfile(n=code.n, type="not-self-dual", d=d)
    type_ = "II" if is_type_II(code) else "I"
    if W is None:
        W = code.low_weight_counts(through)
    prof = SelfDualProfile(n=code.n, type=type_, d=W.min_nonzero_weight() if d is None else d)
    if code.n in (36, 66, 72):
        try:
            fam = extract_parameters(W, code.n, type_)
            fam.d = prof.d
            return fam
        except ParameterError:
            return prof
    return prof
