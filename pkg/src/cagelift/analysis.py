"""Brute-force invariants of simple graphs.

These are the ground truth every symbolic certificate is checked against, so
they stay deliberately plain: breadth-first search and nothing clever.
"""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from dataclasses import asdict, dataclass

from .voltage import SimpleGraph

INFINITE = math.inf


def bfs_distances(g: SimpleGraph, source: int) -> list[float]:
    dist = [INFINITE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == INFINITE:
                dist[w] = du
                queue.append(w)
    return dist


def _shortest_cycle_through_ball(adj, root: int, best: float) -> float:
    """Shortest cycle found by a BFS from ``root``, abandoning depths that cannot beat ``best``."""
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if 2 * du + 1 >= best:
            break
        for w in adj[u]:
            if w == parent[u]:
                continue
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            else:
                best = min(best, du + dw + 1)
    return best


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    One truncated BFS per vertex; the minimum over all roots is exact.
    """
    best = INFINITE
    adj = g.adjacency
    for root in range(g.n):
        if len(adj[root]) >= 2:
            best = _shortest_cycle_through_ball(adj, root, best)
    return best


@dataclass(frozen=True)
class Bipartition:
    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.bipartite


def is_bipartite(g: SimpleGraph) -> Bipartition:
    """Two-colour ``g`` or return an odd cycle as a witness."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return Bipartition(False, odd_cycle=_odd_cycle(parent, u, w))
    return Bipartition(True, coloring=tuple(color))


def _odd_cycle(parent, u, w):
    # both endpoints of the offending edge hang off the same BFS tree
    def chain(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    cu, cw = chain(u), chain(w)
    on_w = set(cw)
    meet = next(x for x in cu if x in on_w)
    left = cu[: cu.index(meet) + 1]
    right = cw[: cw.index(meet)]
    return tuple(left + right[::-1])


def distance(g: SimpleGraph, u: int, v: int) -> float:
    return bfs_distances(g, u)[v]


def remote_pairs(g: SimpleGraph, d: int) -> list[tuple[int, int]]:
    """All pairs ``(u, v)``, ``u < v``, at distance at least ``d``, in lexicographic order."""
    if d < 1:
        raise ValueError("d must be at least 1")
    pairs = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        pairs.extend((u, v) for v in range(u + 1, g.n) if dist[v] >= d)
    return pairs


def degree_histogram(g: SimpleGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(nb) for nb in g.adjacency).items()))


def diameter(g: SimpleGraph) -> float:
    """Largest distance between two vertices; ``INFINITE`` if disconnected."""
    if g.n == 0:
        return 0
    worst = 0
    for u in range(g.n):
        worst = max(worst, max(bfs_distances(g, u)))
        if worst == INFINITE:
            break
    return worst


@dataclass(frozen=True)
class GraphReport:
    order: int
    size: int
    girth: float
    bipartite: bool
    degree_histogram: dict[int, int]
    diameter: float

    def lines(self) -> list[str]:
        hist = ",".join(f"{d}:{c}" for d, c in self.degree_histogram.items())
        return [
            f"order={self.order}",
            f"size={self.size}",
            f"girth={_fmt(self.girth)}",
            f"bipartite={str(self.bipartite).lower()}",
            f"degree_histogram={hist}",
            f"diameter={_fmt(self.diameter)}",
        ]

    def to_json(self) -> str:
        data = asdict(self)
        data["girth"] = _fmt(self.girth)
        data["diameter"] = _fmt(self.diameter)
        data["degree_histogram"] = {str(k): v for k, v in self.degree_histogram.items()}
        return json.dumps(data, sort_keys=True)


def _fmt(x):
    return "inf" if x == INFINITE else int(x)


def analyze(g: SimpleGraph, with_diameter: bool = True) -> GraphReport:
    return GraphReport(
        order=g.n,
        size=g.size,
        girth=girth(g),
        bipartite=is_bipartite(g).bipartite,
        degree_histogram=degree_histogram(g),
        diameter=diameter(g) if with_diameter else INFINITE,
    )
