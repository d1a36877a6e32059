"""Search for voltage assignments that give a skeleton's lifts a target girth.

The skeleton's walk structure is enumerated once; each candidate assignment
is then scored by evaluating the stored linear forms, which is far cheaper
than lifting.  Anything that survives is re-certified from scratch and
checked by brute force on an explicit lift before it is reported.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .analysis import girth
from .errors import SearchSpaceTooLarge
from .voltage import VoltageGraph, find_collisions, lift
from .walks import WalkAtlas, certify, walk_length_bound

STRATEGIES = ("exhaustive", "random")


@dataclass(frozen=True)
class SearchProblem:
    skeleton: VoltageGraph
    free_arcs: tuple[int, ...]
    target_girth: int
    m_set: tuple[int, ...]
    value_range: tuple[int, int] | None = None  # inclusive; defaults to -(g/2)..(g/2)
    strategy: str = "exhaustive"
    seed: int = 0
    budget: int = 1_000_000
    max_solutions: int | None = None

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if not self.m_set:
            raise ValueError("m_set is empty")
        if not self.free_arcs:
            raise ValueError("no free arcs to search over")
        if len(set(self.free_arcs)) != len(self.free_arcs):
            raise ValueError("free arcs listed twice")
        g = self.skeleton
        for k in self.free_arcs:
            if not 0 <= k < len(g.arcs):
                raise ValueError(f"arc index {k} out of range")
            a = g.arcs[k]
            if g.pinned[a.tail] or g.pinned[a.head]:
                raise ValueError(f"arc {k} touches a pinned vertex; its voltage must stay 0")
        lo, hi = self.values
        if lo > hi:
            raise ValueError(f"empty value range {lo}..{hi}")

    @property
    def values(self) -> tuple[int, int]:
        if self.value_range is None:
            h = self.target_girth // 2
            return -h, h
        return self.value_range

    @property
    def space_size(self) -> int:
        lo, hi = self.values
        return (hi - lo + 1) ** len(self.free_arcs)


@dataclass(frozen=True)
class SearchResult:
    assignments_found: list[tuple[tuple[int, ...], tuple[int, ...]]]
    candidates_tried: int
    budget_exhausted: bool = False
    elapsed: float = field(default=0.0, compare=False)

    def graphs(self, p: SearchProblem) -> list[VoltageGraph]:
        return [_assign(p.skeleton, p.free_arcs, vals) for vals, _ in self.assignments_found]


def thread_count() -> int:
    raw = os.environ.get("CAGELIFT_THREADS", "1").strip() or "1"
    n = int(raw)
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


def _assign(g: VoltageGraph, free: Sequence[int], values: Sequence[int]) -> VoltageGraph:
    vol = [a.voltage for a in g.arcs]
    for k, x in zip(free, values):
        vol[k] = x
    return g.with_voltages(vol)


class _Scorer:
    def __init__(self, p: SearchProblem):
        self.p = p
        g = p.skeleton
        self.max_len = walk_length_bound(g, p.target_girth)
        self.atlas = WalkAtlas(g, self.max_len)
        self.base = [a.voltage for a in g.arcs]
        self.moduli = sorted(set(p.m_set))

    def passes(self, values) -> bool:
        vol = list(self.base)
        for k, x in zip(self.p.free_arcs, values):
            vol[k] = x
        g = self.p.skeleton.with_voltages(vol)
        for m in self.moduli:  # smallest first: cheapest rejections
            if find_collisions(g, m) or self.atlas.shortest_cycle(m, vol) is not None:
                return False
        return True

    def confirm(self, values) -> bool:
        """Independent re-check: fresh certificate plus brute-force girth at the smallest modulus."""
        g = _assign(self.p.skeleton, self.p.free_arcs, values)
        cert = certify(g, self.p.target_girth, self.moduli)
        if cert.violated_moduli():
            return False
        return girth(lift(g, self.moduli[0])) >= self.p.target_girth


def _scan_chunk(args):
    p, candidates = args
    scorer = _Scorer(p)
    return [c for c in candidates if scorer.passes(c)]


def search(p: SearchProblem) -> SearchResult:
    start = time.perf_counter()
    scorer = _Scorer(p)
    lo, hi = p.values
    values = range(lo, hi + 1)
    hits: list[tuple[int, ...]] = []
    exhausted = False

    if p.strategy == "exhaustive":
        if p.space_size > p.budget:
            raise SearchSpaceTooLarge(f"{p.space_size} candidates exceed the budget of {p.budget}")
        candidates = list(product(values, repeat=len(p.free_arcs)))
        tried = len(candidates)
        workers = min(thread_count(), max(1, len(candidates) // 256))
        if workers > 1:
            size = -(-len(candidates) // workers)
            chunks = [(p, candidates[i:i + size]) for i in range(0, len(candidates), size)]
            with ProcessPoolExecutor(workers) as pool:
                for part in pool.map(_scan_chunk, chunks):
                    hits.extend(part)
        else:
            hits = [c for c in candidates if scorer.passes(c)]
    else:
        rng = random.Random(p.seed)
        seen: set[tuple[int, ...]] = set()
        tried = 0
        while tried < p.budget:
            cand = tuple(rng.choice(values) for _ in p.free_arcs)
            tried += 1
            if cand not in seen and scorer.passes(cand):
                hits.append(cand)
                if p.max_solutions is not None and len(set(hits)) >= p.max_solutions:
                    break
            seen.add(cand)
        else:
            exhausted = True

    found = []
    for cand in sorted(set(hits)):
        if not scorer.confirm(cand):
            raise RuntimeError(f"assignment {cand} passed the atlas check but failed re-certification")
        found.append((cand, tuple(scorer.moduli)))
    if p.max_solutions is not None:
        found = found[: p.max_solutions]
    return SearchResult(found, tried, exhausted, time.perf_counter() - start)
