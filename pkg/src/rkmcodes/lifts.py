"""Projection to F_2, lifts of binary constructions, and the lift search."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .binary import BinaryCode, BudgetExceeded, SelfDualProfile, profile
from .constructions import Construction
from .gray import gray_code
from .rcodes import RingCode, RingMatrix
from .ring import RingElement, RingParams, nonunits, units

EXHAUSTIVE_LIMIT = 1 << 24


def project(obj):
    """mu: c_00 of an element, entrywise on matrices, rowwise on codes."""
    if isinstance(obj, RingElement):
        return obj.value & 1
    if isinstance(obj, int):
        return obj & 1
    if isinstance(obj, RingMatrix):
        return obj.project()
    if isinstance(obj, RingCode):
        return BinaryCode(obj.n, obj.projection_rows())
    if isinstance(obj, Construction):
        return obj.project()
    raise TypeError(f"cannot project {type(obj).__name__}")


@dataclass
class LiftSearchSpec:
    seed: Construction  # binary construction (entries 0/1, params (1, 1))
    params: RingParams
    strategy: str = "exhaustive"  # or "sampled"
    samples: int = 1000
    seed_value: int = 0
    d_target: Optional[int] = None
    budget: int = EXHAUSTIVE_LIMIT

    def __post_init__(self):
        if any(a not in (0, 1) for a in self.seed.entries):
            raise ValueError("seed construction must be binary")
        if self.strategy not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown strategy {self.strategy!r}")

    def choices(self) -> list:
        u, nu = units(self.params), nonunits(self.params)
        return [u if a else nu for a in self.seed.entries]

    @property
    def space_size(self) -> int:
        half = self.params.size // 2
        return half ** len(self.seed.entries)


def enumerate_lifts(spec: LiftSearchSpec) -> Iterator[Construction]:
    """Lifts of the seed: 1 -> unit, 0 -> non-unit, in deterministic order."""
    choices = spec.choices()
    if spec.strategy == "exhaustive":
        if spec.space_size > min(spec.budget, EXHAUSTIVE_LIMIT):
            raise BudgetExceeded(
                f"{spec.space_size} lifts exceed the exhaustive budget {min(spec.budget, EXHAUSTIVE_LIMIT)}"
            )
        for combo in itertools.product(*choices):
            yield spec.seed.with_entries(combo, spec.params)
        return
    if spec.samples > spec.budget:
        raise BudgetExceeded(f"{spec.samples} samples exceed budget {spec.budget}")
    rng = random.Random(spec.seed_value)
    for _ in range(spec.samples):
        yield spec.seed.with_entries([rng.choice(c) for c in choices], spec.params)


@dataclass
class SearchResult:
    construction: Construction
    profile: SelfDualProfile
    index: int  # position in the candidate stream


@dataclass
class SearchBucket:
    key: tuple  # (d, A_0..A_16 prefix)
    results: list = field(default_factory=list)

    @property
    def representative(self) -> SearchResult:
        return self.results[0]


def _through(n: int, type_: str, dim: int) -> int:
    # highest weight needed to place the code in its family
    if dim <= 20:
        return min(16, n)
    if n == 66:
        return 14
    if n == 72 and type_ == "II":
        return 12
    return 16


def evaluate(cand: Construction, d_target: Optional[int]) -> Optional[tuple]:
    """Filter pipeline for one candidate; None when rejected."""
    if not cand.is_self_dual():
        return None
    B = gray_code(cand.code())
    d = B.min_distance(stop_below=d_target)
    if d_target is not None and d < d_target:
        return None
    type_ = "II" if B.is_doubly_even() else "I"
    through = _through(B.n, type_, B.dimension)
    W = B.low_weight_counts(through)
    return profile(B, d=d, W=W), W.prefix(through)


def _evaluate_chunk(args):
    chunk, d_target = args
    return [(i, evaluate(c, d_target)) for i, c in chunk]


def search(spec: LiftSearchSpec, workers: int = 1, chunk_size: int = 256) -> list:
    """Lift, filter by A A^t = I, Gray-map, filter on distance, profile, bucket.

    Returns buckets ordered by first appearance in the candidate stream.
    """
    stream = enumerate(enumerate_lifts(spec))
    hits = []
    if workers <= 1:
        for i, cand in stream:
            res = evaluate(cand, spec.d_target)
            if res is not None:
                hits.append((i, cand, res))
    else:
        chunks, cands = [], {}
        for batch in iter(lambda: list(itertools.islice(stream, chunk_size)), []):
            for i, c in batch:
                cands[i] = c
            chunks.append((batch, spec.d_target))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_evaluate_chunk, chunks):
                for i, res in part:
                    if res is not None:
                        hits.append((i, cands[i], res))
    buckets = {}
    for i, cand, (prof, prefix) in sorted(hits, key=lambda h: h[0]):
        key = (prof.d, prefix)
        buckets.setdefault(key, SearchBucket(key)).results.append(SearchResult(cand, prof, i))
    return list(buckets.values())


def check_distance_bound(code: RingCode) -> Optional[bool]:
    """min Lee weight of C <= 2m * d(mu(C)); None when mu(C) = {0}.

    One Gray-image word of weight <= 2m d' settles it, so the distance
    search stops as soon as such a word appears.
    """
    proj = project(code)
    if proj.dimension == 0:
        return None
    bound = 2 * code.params.m * proj.min_distance()
    d_lee = gray_code(code).min_distance(stop_below=bound + 1)
    return d_lee <= bound


def format_report(buckets: list) -> str:
    """Text table in the published column layout (encoded entries)."""
    lines = []
    for b in buckets:
        for r in b.results:
            c, prof = r.construction, r.profile
            if c.kind == "dc":
                cols = [" ".join(map(str, c.parts[0])), "-"]
            elif c.kind == "bdc":
                cols = [" ".join(map(str, c.parts[1])), " ".join(map(str, c.parts[0]))]
            else:
                cols = [" ".join(map(str, c.parts[0])), " ".join(map(str, c.parts[1]))]
            params = []
            for key in ("alpha", "beta", "gamma"):
                val = getattr(prof, key)
                if val is not None:
                    params.append(f"{key}={val}")
            lines.append(
                f"({cols[0]})\t({cols[1]})\t[{prof.n},{prof.n // 2},{prof.d}] "
                f"Type {prof.type}\t{prof.family}\t{' '.join(params) or '-'}"
            )
    return "\n".join(lines)
