"""Gray map R_{k,m}^n -> F_2^{kmn} and the Lee weight it induces.

Both the u-level map (phi_k1) and the v-level extension use the same nested
interval schedule: output block t (t = 1..order) is the sum of components
l_t..r_t with l_t = t // 2 and r_t = order - 1 - (t - 1) // 2.

Bit layout of an image of a length-n vector: block index b = t_v*k + t_u
(both zero based) occupies bits b*n .. b*n + n - 1, coordinate i at b*n + i.
This is the left-to-right block listing of the definition, with each block an
F_2^n vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .ring import RingElement, RingError, RingParams


@lru_cache(maxsize=None)
def schedule(order: int) -> tuple:
    """Interval pairs (l_t, r_t), t = 1..order."""
    if order < 1:
        raise ValueError("order must be positive")
    return tuple((t // 2, order - 1 - (t - 1) // 2) for t in range(1, order + 1))


def _parity(x: int) -> int:
    return x.bit_count() & 1


def _phi_k1_bits(k: int, a: int) -> int:
    out = 0
    for t, (lo, hi) in enumerate(schedule(k)):
        seg = (a >> lo) & ((1 << (hi - lo + 1)) - 1)
        out |= _parity(seg) << t
    return out


def gray_element(p: RingParams, a: int) -> int:
    """km-bit Gray image of one packed element (bit t_v*k + t_u)."""
    k, m = p.k, p.m
    colmask = (1 << k) - 1
    cols = [(a >> (j * k)) & colmask for j in range(m)]
    out = 0
    for tv, (lo, hi) in enumerate(schedule(m)):
        s = 0
        for j in range(lo, hi + 1):
            s ^= cols[j]
        out |= _phi_k1_bits(k, s) << (tv * k)
    return out


@lru_cache(maxsize=16)
def gray_table(p: RingParams) -> tuple:
    if p.nbits > 16:
        raise RingError("Gray table limited to k*m <= 16")
    return tuple(gray_element(p, a) for a in range(p.size))


def _gray_of(p: RingParams):
    if p.nbits <= 16:
        return gray_table(p).__getitem__
    return lambda a: gray_element(p, a)


def gray_matrix(p: RingParams) -> list:
    """Images of the basis monomials, as km-bit integers (rows of the map)."""
    return [gray_element(p, 1 << pos) for pos in range(p.nbits)]


@dataclass(frozen=True)
class BinaryWord:
    length: int
    bits: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __str__(self):
        return "".join(str(b) for b in self.to_list())


def _values(p: RingParams, vec) -> list:
    out = []
    for a in vec:
        if isinstance(a, RingElement):
            if a.params != p:
                raise RingError("parameter mismatch in vector")
            out.append(a.value)
        else:
            out.append(int(a))
    return out


def gray_bits(p: RingParams, vec: Sequence[int]) -> int:
    """Packed Gray image of a vector of encoded elements."""
    g = _gray_of(p)
    n = len(vec)
    out = 0
    for i, a in enumerate(vec):
        img = g(a)
        while img:
            low = img & -img
            b = low.bit_length() - 1
            out |= 1 << (b * n + i)
            img ^= low
    return out


def phi_k1(p: RingParams, vec) -> BinaryWord:
    """Gray map on R_{k,1}^n; rejects rings with m != 1."""
    if p.m != 1:
        raise RingError(f"phi_k1 needs m = 1, got {p}")
    vals = _values(p, vec)
    return BinaryWord(p.k * len(vals), gray_bits(p, vals))


def phi_km(p: RingParams, vec) -> BinaryWord:
    vals = _values(p, vec)
    return BinaryWord(p.nbits * len(vals), gray_bits(p, vals))


def lee_weight(p: RingParams, a) -> int:
    """Lee weight of an element or a vector (Hamming weight of its image)."""
    if isinstance(a, (int, RingElement)):
        a = [a]
    g = _gray_of(p)
    return sum(g(x).bit_count() for x in _values(p, a))


def lee_distance(p: RingParams, a, b) -> int:
    va, vb = _values(p, a), _values(p, b)
    return lee_weight(p, [x ^ y for x, y in zip(va, vb)])


def gray_code(code):
    """Binary image of a code over R_{k,m} as a BinaryCode.

    The image is the F_2-span of phi(u^i v^j g) over generators g.
    """
    from .binary import BinaryCode

    p = code.params
    rows = [gray_bits(p, vec) for vec in code.f2_spanning_vectors()]
    return BinaryCode(p.nbits * code.n, rows)


def check_gray_duality(code, budget: int = 1 << 24) -> bool:
    """Exhaustively verify phi(C^perp) == phi(C)^perp as sets of words."""
    p = code.params
    dual = code.brute_force_dual(budget=budget)
    image_of_dual = {gray_bits(p, v) for v in dual.codewords(budget=budget)}
    bdual = gray_code(code).dual()
    if bdual.dimension > 26:
        raise ValueError("binary dual too large to list")
    dual_of_image = set(bdual.codewords())
    return image_of_dual == dual_of_image
