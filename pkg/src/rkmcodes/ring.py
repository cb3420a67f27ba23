"""Arithmetic in R_{k,m} = F_2[u,v]/<u^k, v^m, uv - vu>.

An element sum c_ij u^i v^j is packed into one integer with c_ij at bit
``i + j*k``.  That integer is also the canonical external encoding, so
``encode``/``decode`` are the identity on the packed value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

MAX_BITS = 32


class RingError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RingParams:
    """Parameters (k, m) of R_{k,m}; requires k >= m >= 1 and k*m <= 32."""

    k: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.m, int)):
            raise RingError("k and m must be integers")
        if not self.k >= self.m >= 1:
            raise RingError(f"need k >= m >= 1, got k={self.k}, m={self.m}")
        if self.k * self.m > MAX_BITS:
            raise RingError(f"k*m = {self.k * self.m} exceeds the cap of {MAX_BITS}")

    @property
    def nbits(self) -> int:
        return self.k * self.m

    @property
    def size(self) -> int:
        return 1 << self.nbits

    @property
    def mask(self) -> int:
        return self.size - 1

    def __str__(self):
        return f"R_{{{self.k},{self.m}}}"


@lru_cache(maxsize=None)
def _row_masks(p: RingParams) -> tuple:
    # masks[i]: all positions whose u-exponent is >= i
    out = []
    for i in range(p.k):
        mask = 0
        for j in range(p.m):
            for r in range(i, p.k):
                mask |= 1 << (r + j * p.k)
        out.append(mask)
    return tuple(out)


def mul_int(p: RingParams, a: int, b: int) -> int:
    """Product of two packed elements (truncated 2-D convolution over F_2)."""
    if a == 0 or b == 0:
        return 0
    masks = _row_masks(p)
    k = p.k
    out = 0
    while b:
        low = b & -b
        pos = low.bit_length() - 1
        # shifting by pos = i + j*k moves (i1, j1) to (i1+i, j1+j); overflow in
        # u wraps into a lower row of the next column and is masked off
        out ^= (a << pos) & masks[pos % k]
        b ^= low
    return out


@lru_cache(maxsize=16)
def mul_table(p: RingParams) -> tuple:
    """Full multiplication table as a tuple of rows; only for k*m <= 8."""
    if p.nbits > 8:
        raise RingError("multiplication table limited to k*m <= 8")
    q = p.size
    return tuple(tuple(mul_int(p, a, b) for b in range(q)) for a in range(q))


def inverse_exponent(p: RingParams) -> int:
    """2^n - 1 for the smallest n with 2^n >= max(k, m)."""
    e = 1
    while e < max(p.k, p.m):
        e <<= 1
    return e - 1


def pow_int(p: RingParams, a: int, e: int) -> int:
    result, base = 1, a
    while e:
        if e & 1:
            result = mul_int(p, result, base)
        base = mul_int(p, base, base)
        e >>= 1
    return result


def inverse_int(p: RingParams, a: int) -> int:
    if not a & 1:
        raise RingError(f"{format_poly(p, a)} is not a unit")
    return pow_int(p, a, inverse_exponent(p))


# -- polynomial strings -------------------------------------------------------

_TERM = re.compile(r"^(?:(u)(?:\^(\d+))?)?(?:(v)(?:\^(\d+))?)?$")


def format_poly(p: RingParams, a: int) -> str:
    """Render as e.g. ``uv+v+u^2+1``; terms in descending bit position."""
    if a == 0:
        return "0"
    terms = []
    for pos in range(p.nbits - 1, -1, -1):
        if not (a >> pos) & 1:
            continue
        i, j = pos % p.k, pos // p.k
        t = ""
        if i:
            t += "u" if i == 1 else f"u^{i}"
        if j:
            t += "v" if j == 1 else f"v^{j}"
        terms.append(t or "1")
    return "+".join(terms)


def parse_poly(p: RingParams, text: str) -> int:
    """Inverse of :func:`format_poly`; whitespace-insensitive, any term order."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise RingError("empty polynomial")
    value = 0
    for term in s.split("+"):
        if term == "0":
            continue
        if term == "1":
            value ^= 1
            continue
        mt = _TERM.match(term)
        if not term or mt is None or not (mt.group(1) or mt.group(3)):
            raise RingError(f"bad term {term!r} in {text!r}")
        i = (int(mt.group(2)) if mt.group(2) else 1) if mt.group(1) else 0
        j = (int(mt.group(4)) if mt.group(4) else 1) if mt.group(3) else 0
        if i >= p.k or j >= p.m:
            # u^k = 0 and v^m = 0 in the quotient
            continue
        value ^= 1 << (i + j * p.k)
    return value


# -- value type ---------------------------------------------------------------


@dataclass(frozen=True)
class RingElement:
    params: RingParams
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.params.size:
            raise RingError(f"{self.value} out of range for {self.params}")

    @classmethod
    def parse(cls, p: RingParams, text: str) -> "RingElement":
        return cls(p, parse_poly(p, text))

    @classmethod
    def monomial(cls, p: RingParams, i: int, j: int = 0) -> "RingElement":
        if i >= p.k or j >= p.m:
            return cls(p, 0)
        return cls(p, 1 << (i + j * p.k))

    def coeff(self, i: int, j: int = 0) -> int:
        return (self.value >> (i + j * self.params.k)) & 1

    def coeffs(self) -> list:
        """k x m bit matrix c[i][j]."""
        return [[self.coeff(i, j) for j in range(self.params.m)] for i in range(self.params.k)]

    def _check(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.params != self.params:
            raise RingError(f"parameter mismatch: {self.params} vs {other.params}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElement(self.params, self.value ^ other.value)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElement(self.params, mul_int(self.params, self.value, other.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RingElement(self.params, pow_int(self.params, self.value, e))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def is_unit(self) -> bool:
        return bool(self.value & 1)

    def inverse(self) -> "RingElement":
        return RingElement(self.params, inverse_int(self.params, self.value))

    def __str__(self):
        return format_poly(self.params, self.value)

    def __repr__(self):
        return f"RingElement({self.params.k},{self.params.m}: {self})"


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


def inverse(a: RingElement) -> RingElement:
    return a.inverse()


def encode(a: RingElement) -> int:
    return a.value


def decode(x: int, p: RingParams) -> RingElement:
    return RingElement(p, x)


def units(p: RingParams) -> list:
    """Encoded units in increasing order (c_00 = 1)."""
    return list(range(1, p.size, 2))


def nonunits(p: RingParams) -> list:
    return list(range(0, p.size, 2))
