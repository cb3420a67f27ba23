"""Linear codes over R_{k,m}: matrices, inner products, duals, enumeration.

A ring vector of length n is a tuple of encoded elements.  Where a flat
integer is more convenient it is packed with coordinate i occupying bits
i*km .. i*km + km - 1.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .binary import BudgetExceeded, rref
from .ring import RingElement, RingError, RingParams, mul_int, mul_table

DEFAULT_BUDGET = 1 << 20


def _mul_fn(p: RingParams):
    if p.nbits <= 8:
        table = mul_table(p)
        return lambda a, b: table[a][b]
    return lambda a, b: mul_int(p, a, b)


def pack(p: RingParams, vec: Sequence[int]) -> int:
    out = 0
    for i, a in enumerate(vec):
        out |= int(a) << (i * p.nbits)
    return out


def unpack(p: RingParams, word: int, n: int) -> tuple:
    return tuple((word >> (i * p.nbits)) & p.mask for i in range(n))


class RingMatrix:
    """Dense matrix over R_{k,m} holding encoded elements."""

    def __init__(self, params: RingParams, rows: Iterable[Iterable]):
        self.params = params
        out = []
        for r in rows:
            vals = []
            for a in r:
                if isinstance(a, RingElement):
                    if a.params != params:
                        raise RingError("parameter mismatch in matrix")
                    a = a.value
                a = int(a)
                if not 0 <= a < params.size:
                    raise RingError(f"entry {a} out of range for {params}")
                vals.append(a)
            out.append(tuple(vals))
        if out and len({len(r) for r in out}) != 1:
            raise ValueError("ragged matrix")
        self.rows = tuple(out)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @classmethod
    def identity(cls, p: RingParams, n: int) -> "RingMatrix":
        return cls(p, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, p: RingParams, r: int, c: int) -> "RingMatrix":
        return cls(p, [[0] * c for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RingMatrix) and self.params == other.params and self.rows == other.rows

    def __hash__(self):
        return hash((self.params, self.rows))

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.params, zip(*self.rows)) if self.rows else self

    T = property(transpose)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape or self.params != other.params:
            raise ValueError("shape/params mismatch")
        return RingMatrix(self.params, [[a ^ b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.params != other.params:
            raise RingError("parameter mismatch")
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        mul = _mul_fn(self.params)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc ^= mul(a, b)
                row.append(acc)
            out.append(row)
        return RingMatrix(self.params, out)

    def hstack(self, other: "RingMatrix") -> "RingMatrix":
        return RingMatrix(self.params, [r + s for r, s in zip(self.rows, other.rows)])

    def vstack(self, other: "RingMatrix") -> "RingMatrix":
        return RingMatrix(self.params, self.rows + other.rows)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "RingMatrix":
        return RingMatrix(self.params, [r[c0:c1] for r in self.rows[r0:r1]])

    def is_identity(self) -> bool:
        n, c = self.shape
        return n == c and all(self.rows[i][j] == (i == j) for i in range(n) for j in range(n))

    def project(self) -> list:
        """Entrywise c_00, as a list of 0/1 lists."""
        return [[a & 1 for a in r] for r in self.rows]

    def to_lists(self) -> list:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"RingMatrix({self.params}, {self.to_lists()})"

    def __str__(self):
        return "\n".join(" ".join(f"{a:>2d}" for a in r) for r in self.rows)


def inner_product(p: RingParams, a: Sequence, b: Sequence) -> int:
    """sum a_i b_i in R_{k,m}, as an encoded element."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    mul = _mul_fn(p)
    acc = 0
    for x, y in zip(a, b):
        x, y = int(x), int(y)
        if x and y:
            acc ^= mul(x, y)
    return acc


def standard_form_block(G: RingMatrix) -> RingMatrix:
    """A from G = [I_n | A]; raises for anything else."""
    n, c = G.shape
    if c != 2 * n or not G.block(0, n, 0, n).is_identity():
        raise ValueError("generator is not of the form [I_n | A] with A square")
    return G.block(0, n, n, 2 * n)


def is_self_dual_free(G: RingMatrix) -> bool:
    """[I | A] is self-dual iff A A^t = I (characteristic 2)."""
    A = standard_form_block(G)
    return (A @ A.T).is_identity()


class RingCode:
    """R_{k,m}-submodule of R^n spanned by the given generator rows."""

    def __init__(self, params: RingParams, generators, n: Optional[int] = None):
        if isinstance(generators, RingMatrix):
            generators = generators.rows
        gens = [tuple(int(a) for a in g) for g in generators]
        if n is None:
            if not gens:
                raise ValueError("length needed for a code without generators")
            n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError("generator length mismatch")
        for g in gens:
            for a in g:
                if not 0 <= a < params.size:
                    raise RingError(f"entry {a} out of range for {params}")
        self.params = params
        self.n = n
        self.generators = RingMatrix(params, gens) if gens else RingMatrix(params, [])
        self._basis = None

    @property
    def free(self) -> bool:
        """Generators of the form [I_g | A] (rank g free module)."""
        g = len(self.generators.rows)
        return g > 0 and g <= self.n and self.generators.block(0, g, 0, g).is_identity()

    def __repr__(self):
        return f"RingCode({self.params}, n={self.n}, gens={len(self.generators.rows)})"

    def f2_spanning_vectors(self) -> list:
        """u^i v^j * g for every generator g and basis monomial: spans C over F_2."""
        p = self.params
        mul = _mul_fn(p)
        out = []
        for g in self.generators.rows:
            for pos in range(p.nbits):
                mono = 1 << pos
                out.append(tuple(mul(mono, a) if a else 0 for a in g))
        return out

    def f2_basis(self) -> list:
        """Packed F_2 basis of C."""
        if self._basis is None:
            p = self.params
            packed = [pack(p, v) for v in self.f2_spanning_vectors()]
            self._basis = rref(packed, p.nbits * self.n)[0]
        return self._basis

    @property
    def f2_dimension(self) -> int:
        return len(self.f2_basis())

    @property
    def size(self) -> int:
        return 1 << self.f2_dimension

    def codewords(self, budget: int = DEFAULT_BUDGET) -> Iterator[tuple]:
        """Every codeword once, in lexicographic coefficient order."""
        if self.size > budget:
            raise BudgetExceeded(f"|C| = {self.size} exceeds budget {budget}")
        basis = self.f2_basis()
        words = [0]
        for b in basis:
            words += [w ^ b for w in words]
        vecs = sorted(unpack(self.params, w, self.n) for w in words)
        yield from vecs

    def contains(self, vec: Sequence[int]) -> bool:
        basis = self.f2_basis()
        w = pack(self.params, vec)
        # basis is in RREF over the packed bit positions
        for b in basis:
            low = b & -b
            if w & low:
                w ^= b
        return w == 0

    def brute_force_dual(self, budget: int = 1 << 24) -> "RingCode":
        """C^perp by scanning every vector of R^n against each generator."""
        p, n = self.params, self.n
        total_bits = p.nbits * n
        if (1 << total_bits) > budget:
            raise BudgetExceeded(f"|R|^n = 2^{total_bits} exceeds budget {budget}")
        q = p.size
        xs = np.arange(q, dtype=np.int64)
        # mul-by-g_i lookup per generator coordinate, built from linearity
        tables = []
        for g in self.generators.rows:
            per = []
            for a in g:
                t = np.zeros(q, dtype=np.int64)
                for bit in range(p.nbits):
                    t ^= ((xs >> bit) & 1) * mul_int(p, 1 << bit, a)
                per.append(t)
            tables.append(per)
        hits = []
        step = 1 << min(total_bits, 20)
        for start in range(0, 1 << total_bits, step):
            cand = np.arange(start, start + step, dtype=np.int64)
            ok = np.ones(len(cand), dtype=bool)
            for per in tables:
                acc = np.zeros(len(cand), dtype=np.int64)
                for i, t in enumerate(per):
                    acc ^= t[(cand >> (i * p.nbits)) & p.mask]
                ok &= acc == 0
            hits.append(cand[ok])
        found = np.concatenate(hits)
        basis = _incremental_basis(int(x) for x in found)
        dual = RingCode(p, [unpack(p, b, n) for b in basis], n=n)
        if dual.size != len(found):
            raise AssertionError("dual scan is not closed under addition")
        return dual

    def is_self_dual_bruteforce(self, budget: int = 1 << 24) -> bool:
        dual = self.brute_force_dual(budget)
        return dual.size == self.size and all(dual.contains(v) for v in self.f2_spanning_vectors())

    def projection_rows(self) -> list:
        """Packed binary rows spanning mu(C)."""
        return [sum((a & 1) << i for i, a in enumerate(g)) for g in self.generators.rows]


def _incremental_basis(words: Iterable[int]) -> list:
    pivots = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top in pivots:
                w ^= pivots[top]
            else:
                pivots[top] = w
                break
    return list(pivots.values())


def enumerate_codewords(code: RingCode, budget: int = DEFAULT_BUDGET) -> Iterator[tuple]:
    return code.codewords(budget)


def brute_force_dual(code: RingCode, budget: int = 1 << 24) -> RingCode:
    return code.brute_force_dual(budget)


def r_linear_span(code: RingCode, budget: int = DEFAULT_BUDGET) -> set:
    """Slow oracle: every sum r_1 g_1 + ... + r_g g_g with r_i in R, deduplicated."""
    p = code.params
    gens = code.generators.rows
    if p.size ** len(gens) > budget:
        raise BudgetExceeded("too many scalar combinations")
    mul = _mul_fn(p)
    words = {tuple([0] * code.n)}
    for g in gens:
        multiples = {tuple(mul(r, a) for a in g) for r in range(p.size)}
        words = {tuple(x ^ y for x, y in zip(w, mlt)) for w in words for mlt in multiples}
    return words
