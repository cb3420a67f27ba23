"""Double circulant, bordered double circulant and four-circulant generators.

Spec-file lines (integers are canonical element encodings)::

    dc k m | r1 r2 ... rn
    bdc k m | x y z | r1 ... r(n-1)
    fc k m | a1 ... an | b1 ... bn
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .rcodes import RingCode, RingMatrix, _mul_fn, is_self_dual_free
from .ring import RingParams

KINDS = ("dc", "bdc", "fc")


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class CirculantSpec:
    first_row: tuple

    def matrix(self, p: RingParams) -> RingMatrix:
        return circulant(p, self.first_row)


@dataclass(frozen=True)
class BorderSpec:
    x: int
    y: int
    z: int
    core: CirculantSpec


def circulant(p: RingParams, first_row: Sequence[int]) -> RingMatrix:
    """Row i is the first row rotated right by i."""
    r = [int(a) for a in first_row]
    n = len(r)
    return RingMatrix(p, [[r[(j - i) % n] for j in range(n)] for i in range(n)])


def double_circulant(p: RingParams, spec) -> RingMatrix:
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(tuple(spec))
    M = spec.matrix(p)
    return RingMatrix.identity(p, M.shape[0]).hstack(M)


def bordered_block(p: RingParams, spec: BorderSpec) -> RingMatrix:
    core = spec.core.matrix(p)
    n = core.shape[0] + 1
    if n < 2:
        raise SpecError("bordered construction needs a core of order >= 1")
    rows = [[spec.x] + [spec.y] * (n - 1)]
    rows += [[spec.z] + list(r) for r in core.rows]
    return RingMatrix(p, rows)


def bordered_double_circulant(p: RingParams, spec: BorderSpec) -> RingMatrix:
    B = bordered_block(p, spec)
    return RingMatrix.identity(p, B.shape[0]).hstack(B)


class FourCirculant(NamedTuple):
    generator: RingMatrix
    condition_holds: bool


def four_circulant(p: RingParams, a, b) -> FourCirculant:
    """[I_2n | [[A, B], [B^t, A^t]]] plus whether A A^t + B B^t = I_n."""
    a = a if isinstance(a, CirculantSpec) else CirculantSpec(tuple(a))
    b = b if isinstance(b, CirculantSpec) else CirculantSpec(tuple(b))
    if len(a.first_row) != len(b.first_row):
        raise SpecError("A and B must have the same order")
    A, B = a.matrix(p), b.matrix(p)
    ok = (A @ A.T + B @ B.T).is_identity()
    top = A.hstack(B)
    bottom = B.T.hstack(A.T)
    block = top.vstack(bottom)
    G = RingMatrix.identity(p, block.shape[0]).hstack(block)
    if ok:
        assert is_self_dual_free(G)
    return FourCirculant(G, ok)


def circulant_gram_row(p: RingParams, row: Sequence[int]) -> list:
    """First row of C C^t for the circulant C with the given first row."""
    mul = _mul_fn(p)
    n = len(row)
    out = []
    for j in range(n):
        acc = 0
        for l in range(n):
            a, b = row[l], row[(l - j) % n]
            if a and b:
                acc ^= mul(a, b)
        out.append(acc)
    return out


@dataclass(frozen=True)
class Construction:
    """One parsed spec line.

    ``parts`` holds the payload groups in file order: ``(row,)`` for dc,
    ``((x, y, z), core)`` for bdc and ``(a_row, b_row)`` for fc.
    """

    kind: str
    params: RingParams
    parts: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown construction {self.kind!r}")
        expected = {"dc": 1, "bdc": 2, "fc": 2}[self.kind]
        if len(self.parts) != expected:
            raise SpecError(f"{self.kind} needs {expected} payload group(s), got {len(self.parts)}")
        for grp in self.parts:
            for a in grp:
                if not 0 <= a < self.params.size:
                    raise SpecError(f"element {a} out of range for {self.params}")
        if self.kind == "bdc" and len(self.parts[0]) != 3:
            raise SpecError("bdc border needs exactly x y z")
        if self.kind == "fc" and len(self.parts[0]) != len(self.parts[1]):
            raise SpecError("fc rows must have equal length")
        if any(len(g) == 0 for g in self.parts):
            raise SpecError("empty payload group")

    @property
    def entries(self) -> tuple:
        """All free entries, flattened in file order."""
        return tuple(a for grp in self.parts for a in grp)

    def with_entries(self, values, params: RingParams = None) -> "Construction":
        values = list(values)
        parts, pos = [], 0
        for grp in self.parts:
            parts.append(tuple(values[pos : pos + len(grp)]))
            pos += len(grp)
        return Construction(self.kind, params or self.params, tuple(parts))

    @property
    def half_length(self) -> int:
        if self.kind == "dc":
            return len(self.parts[0])
        if self.kind == "bdc":
            return len(self.parts[1]) + 1
        return 2 * len(self.parts[0])

    def generator(self) -> RingMatrix:
        p = self.params
        if self.kind == "dc":
            return double_circulant(p, self.parts[0])
        if self.kind == "bdc":
            x, y, z = self.parts[0]
            return bordered_double_circulant(p, BorderSpec(x, y, z, CirculantSpec(self.parts[1])))
        return four_circulant(p, self.parts[0], self.parts[1]).generator

    def code(self) -> RingCode:
        return RingCode(self.params, self.generator())

    def is_self_dual(self) -> bool:
        """Algebraic test A A^t = I for the right-hand block."""
        p = self.params
        if self.kind == "dc":
            gram = circulant_gram_row(p, self.parts[0])
            return gram[0] == 1 and not any(gram[1:])
        if self.kind == "fc":
            ga = circulant_gram_row(p, self.parts[0])
            gb = circulant_gram_row(p, self.parts[1])
            gram = [x ^ y for x, y in zip(ga, gb)]
            return gram[0] == 1 and not any(gram[1:])
        return is_self_dual_free(self.generator())

    def project(self) -> "Construction":
        """Same construction with every entry replaced by its c_00."""
        return self.with_entries([a & 1 for a in self.entries], RingParams(1, 1))

    def to_line(self) -> str:
        head = f"{self.kind} {self.params.k} {self.params.m}"
        return " | ".join([head] + [" ".join(str(a) for a in grp) for grp in self.parts])

    def __str__(self):
        return self.to_line()


def parse_construction(line: str) -> Construction:
    fields = [f.strip() for f in line.strip().split("|")]
    head = fields[0].split()
    if len(head) != 3:
        raise SpecError(f"expected '<kind> k m' before the first '|', got {fields[0]!r}")
    kind = head[0].lower()
    try:
        k, m = int(head[1]), int(head[2])
        parts = tuple(tuple(int(x) for x in f.split()) for f in fields[1:])
    except ValueError as exc:
        raise SpecError(f"non-integer field in {line.strip()!r}") from exc
    try:
        params = RingParams(k, m)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    return Construction(kind, params, parts)


def parse_spec_file(text: str) -> list:
    """Parse spec lines; blank lines and '#' comments are skipped.

    Errors carry the 1-based line number.
    """
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_construction(line))
        except SpecError as exc:
            raise SpecError(f"line {no}: {exc}") from None
    return out
