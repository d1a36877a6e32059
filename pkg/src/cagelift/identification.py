"""Biregular (3,m;g)-graphs from copies of a cubic graph glued at two far-apart vertices.

Write ``m = 3k + t``.  Each intact copy contributes degree 3 to both glue
points, so ``k`` copies reach degree ``3k``.  The remaining ``t`` comes from
one extra copy that has had an edge removed (``t = 2``) or an edge removed
and two pendant vertices attached (``t = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .analysis import bfs_distances, girth, remote_pairs
from .errors import BadM, NoRemotePair, NotCubic, WrongGirth
from .voltage import SimpleGraph


@dataclass(frozen=True)
class IdentifySpec:
    base: SimpleGraph
    g: int
    m: int
    remote_pair: tuple[int, int] | None = None
    deleted_edge: tuple[int, int] | None = None

    @property
    def k(self) -> int:
        return self.m // 3

    @property
    def t(self) -> int:
        return self.m % 3


def identified_order(n_g: int, m: int) -> int:
    """Order of the glued graph built from ``n_g``-vertex copies."""
    k, t = divmod(m, 3)
    return k * (n_g - 2) + {0: 2, 1: n_g + 2, 2: n_g}[t]


def _check(spec: IdentifySpec) -> None:
    base = spec.base
    if spec.m < 3:
        raise BadM(f"m must be at least 3, got {spec.m}")
    bad = [base.labels[v] for v in range(base.n) if base.degree(v) != 3]
    if bad:
        raise NotCubic(f"base graph is not cubic; e.g. {bad[0]!r} has degree {base.degree(base.index_of(bad[0]))}")
    if spec.g % 2:
        raise WrongGirth(f"the gluing needs an even girth, got {spec.g}")
    actual = girth(base)
    if actual != spec.g:
        raise WrongGirth(f"base graph has girth {actual}, expected {spec.g}")


def _choose_pair(spec: IdentifySpec) -> tuple[int, int]:
    need = spec.g // 2
    if spec.remote_pair is not None:
        x, y = spec.remote_pair
        if x == y or bfs_distances(spec.base, x)[y] < need:
            raise NoRemotePair(f"vertices {x} and {y} are not at distance >= {need}")
        return x, y
    pairs = remote_pairs(spec.base, need)
    if not pairs:
        raise NoRemotePair(f"no two vertices at distance >= {need}")
    return pairs[0]


def identify(spec: IdentifySpec) -> SimpleGraph:
    _check(spec)
    base = spec.base
    k, t = spec.k, spec.t
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    gx, gy = 0, 1

    def add_copy(i: int, skip=None, ends=None):
        """Copy ``i`` of the base; ``ends`` are merged into the glue vertices."""
        local = {}
        for v in range(base.n):
            if ends and v == ends[0]:
                local[v] = gx
            elif ends and v == ends[1]:
                local[v] = gy
            else:
                local[v] = len(labels)
                labels.append(f"c{i}:{base.labels[v]}")
        for u, v in base.edges():
            if skip and {u, v} == set(skip):
                continue
            edges.append((local[u], local[v]))
        return local

    x, y = _choose_pair(spec)
    labels.extend(["x", "y"])
    if t == 0:
        labels[gx], labels[gy] = f"glue:{base.labels[x]}", f"glue:{base.labels[y]}"
        for i in range(1, k + 1):
            add_copy(i, ends=(x, y))
    else:
        e = spec.deleted_edge or base.edges()[0]
        if not base.has_edge(*e):
            raise ValueError(f"{e} is not an edge of the base graph")
        x1, y1 = e
        if t == 2:
            labels[gx], labels[gy] = f"glue:{base.labels[x1]}", f"glue:{base.labels[y1]}"
            add_copy(0, skip=e, ends=(x1, y1))
        else:
            labels[gx], labels[gy] = "glue:x", "glue:y"
            local = add_copy(0, skip=e)
            edges.append((gx, local[x1]))
            edges.append((gy, local[y1]))
        for i in range(1, k + 1):
            add_copy(i, ends=(x, y))
    return SimpleGraph.from_edges(len(labels), edges, labels)


# orders of the cubic cages fed into the corollaries
CAGE_ORDERS = {"g10": 70, "g12": 126, "g14": 348}

# published closed forms: order = whole*m + frac*m + const, keyed by m mod 3
F = Fraction
_COROLLARY = {
    "g10": (22, F(2, 3), {0: F(2), 1: 49 + F(1, 3), 2: 24 + F(2, 3)}),
    "g12": (41, F(1, 3), {0: F(2), 1: 86 + F(2, 3), 2: 43 + F(1, 3)}),
    "g14": (115, F(1, 3), {0: F(2), 1: 234 + F(2, 3), 2: 117 + F(1, 3)}),
}


def corollary_order(g_case: str, m: int) -> Fraction:
    """Order of the (3,m;g)-graph obtained by gluing the cage of the given girth."""
    if g_case not in _COROLLARY:
        raise ValueError(f"unknown case {g_case!r}; choose from {', '.join(_COROLLARY)}")
    if m < 3:
        raise BadM(f"m must be at least 3, got {m}")
    whole, frac, consts = _COROLLARY[g_case]
    return whole * m + frac * m + consts[m % 3]
