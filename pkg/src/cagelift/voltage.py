"""Voltage graphs over Z_m with pinned vertices, and their lifts.

A :class:`VoltageGraph` is a directed multigraph whose arcs carry integer
voltages.  Voltages are kept unreduced; they are read modulo ``m`` only when
the graph is lifted, so one object serves every modulus.

A *pinned* vertex (name ending in ``*``) does not split into a fiber: it lifts
to a single vertex joined to every copy of its neighbours, so in the lift it
has degree ``m`` times its degree in the voltage graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DuplicateName,
    LiftCollision,
    NonzeroVoltageAtPinned,
    PinnedNameMismatch,
    PinnedToPinnedArc,
    UnknownEndpoint,
)


class Arc(NamedTuple):
    tail: int
    head: int
    voltage: int


@dataclass(frozen=True)
class VoltageGraph:
    names: tuple[str, ...]
    pinned: tuple[bool, ...]
    arcs: tuple[Arc, ...]
    description: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @property
    def order(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownEndpoint(f"no vertex named {name!r}") from None

    def arc_names(self, k: int) -> tuple[str, str, int]:
        a = self.arcs[k]
        return self.names[a.tail], self.names[a.head], a.voltage

    def pinned_vertices(self) -> list[int]:
        return [v for v, p in enumerate(self.pinned) if p]

    def unpinned_vertices(self) -> list[int]:
        return [v for v, p in enumerate(self.pinned) if not p]

    def degree(self, v: int) -> int:
        """Undirected degree; a loop counts twice."""
        return sum((a.tail == v) + (a.head == v) for a in self.arcs)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for a in self.arcs:
            deg[a.tail] += 1
            deg[a.head] += 1
        return deg

    def with_voltages(self, voltages: Sequence[int]) -> "VoltageGraph":
        """Copy of this graph with every arc voltage replaced, in arc order."""
        if len(voltages) != len(self.arcs):
            raise ValueError("need one voltage per arc")
        arcs = [(self.names[a.tail], self.names[a.head], int(x)) for a, x in zip(self.arcs, voltages)]
        return new_voltage_graph(zip(self.names, self.pinned), arcs, self.description)

    def underlying_edges(self) -> list[tuple[int, int]]:
        return [(a.tail, a.head) for a in self.arcs]


def new_voltage_graph(
    vertex_specs: Iterable[tuple[str, bool]],
    arcs: Iterable[tuple[str, str, int]],
    description: str = "",
) -> VoltageGraph:
    """Validate and build a voltage graph from names and ``(tail, head, voltage)`` triples."""
    names: list[str] = []
    pinned: list[bool] = []
    seen: set[str] = set()
    for name, is_pinned in vertex_specs:
        if name in seen:
            raise DuplicateName(f"vertex {name!r} declared twice")
        if name.endswith("*") != bool(is_pinned):
            raise PinnedNameMismatch(
                f"vertex {name!r}: names ending in '*' must be exactly the pinned vertices"
            )
        seen.add(name)
        names.append(name)
        pinned.append(bool(is_pinned))
    index = {name: i for i, name in enumerate(names)}

    built: list[Arc] = []
    for tail, head, voltage in arcs:
        for end in (tail, head):
            if end not in index:
                raise UnknownEndpoint(f"arc {tail}->{head}: unknown vertex {end!r}")
        t, h = index[tail], index[head]
        if pinned[t] and pinned[h]:
            raise PinnedToPinnedArc(f"arc {tail}->{head} joins two pinned vertices")
        if (pinned[t] or pinned[h]) and voltage != 0:
            raise NonzeroVoltageAtPinned(
                f"arc {tail}->{head} touches a pinned vertex but has voltage {voltage}"
            )
        built.append(Arc(t, h, int(voltage)))
    return VoltageGraph(tuple(names), tuple(pinned), tuple(built), description)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1`` with sorted neighbour tuples."""

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adjacency[u]
        # neighbour tuples are short; a scan beats bisect here
        return v in nb

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownEndpoint(f"no vertex labelled {label!r}") from None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None):
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValueError("need one label per vertex")
        return cls(tuple(labels), tuple(tuple(sorted(s)) for s in nbrs))

    def relabeled(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` moved to position ``perm[v]``."""
        labels = [""] * self.n
        for v, p in enumerate(perm):
            labels[p] = self.labels[v]
        return SimpleGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()], labels)


def fiber_map(g: VoltageGraph, m: int) -> list[list[int]]:
    """``fiber_map(g, m)[v][i]`` is the lift index of ``v^i``.

    Pinned vertices map every ``i`` to their single lift vertex.
    """
    table: list[list[int]] = []
    nxt = 0
    for v in range(g.order):
        if g.pinned[v]:
            table.append([nxt] * m)
            nxt += 1
        else:
            table.append(list(range(nxt, nxt + m)))
            nxt += m
    return table


def lift_labels(g: VoltageGraph, m: int) -> list[str]:
    labels = []
    for v, name in enumerate(g.names):
        if g.pinned[v]:
            labels.append(name)
        else:
            labels.extend(f"{name}^{i}" for i in range(m))
    return labels


def _lift_edges(g: VoltageGraph, m: int):
    """Yield ``(arc_index, u, w)`` for every lifted edge, pinned arcs once per fiber copy."""
    fib = fiber_map(g, m)
    for k, (t, h, a) in enumerate(g.arcs):
        if g.pinned[t] or g.pinned[h]:
            p, w = (t, h) if g.pinned[t] else (h, t)
            for i in range(m):
                yield k, fib[p][0], fib[w][i]
        else:
            for i in range(m):
                yield k, fib[t][i], fib[h][(i + a) % m]


def find_collisions(g: VoltageGraph, m: int) -> list[tuple[int, int]]:
    """Pairs of arc indices that induce the same lifted edge; ``(k, k)`` marks a self-loop."""
    owner: dict[tuple[int, int], int] = {}
    clashes: set[tuple[int, int]] = set()
    for k, u, w in _lift_edges(g, m):
        if u == w:
            clashes.add((k, k))
            continue
        key = (u, w) if u < w else (w, u)
        prev = owner.setdefault(key, k)
        if prev != k:
            clashes.add((min(prev, k), max(prev, k)))
    # an arc can only collide with itself through a loop whose voltage has order 2
    for k, (t, h, a) in enumerate(g.arcs):
        if t == h and not g.pinned[t] and (2 * a) % m == 0 and a % m != 0:
            clashes.add((k, k))
    return sorted(clashes)


def lift(g: VoltageGraph, m: int) -> SimpleGraph:
    """The derived graph of ``g`` over ``Z_m``.

    Raises :class:`LiftCollision` when two arcs (or one loop) would produce a
    repeated edge or a self-loop; such a lift would have girth at most 2.
    """
    if m < 1:
        raise ValueError("modulus must be at least 1")
    clashes = find_collisions(g, m)
    if clashes:
        desc = ", ".join(
            "{}->{} ({})".format(*g.arc_names(a))
            + ("" if a == b else " / {}->{} ({})".format(*g.arc_names(b)))
            for a, b in clashes
        )
        raise LiftCollision(f"lift at m={m} is not simple: {desc}", clashes)
    labels = lift_labels(g, m)
    return SimpleGraph.from_edges(len(labels), ((u, w) for _, u, w in _lift_edges(g, m)), labels)


def fiber_rotation(g: VoltageGraph, m: int) -> list[int]:
    """Permutation of lift vertices sending ``v^i`` to ``v^(i+1)`` and fixing pinned vertices."""
    fib = fiber_map(g, m)
    n = sum(1 if p else m for p in g.pinned)
    perm = list(range(n))
    for v in range(g.order):
        if not g.pinned[v]:
            for i in range(m):
                perm[fib[v][i]] = fib[v][(i + 1) % m]
    return perm


@dataclass(frozen=True)
class SkeletonIssue:
    vertex: str
    degree: int
    expected: int


def validate_semicubic_skeleton(g: VoltageGraph) -> list[SkeletonIssue]:
    """Vertices violating the shape "pinned vertices have degree 1, all others degree 3"."""
    issues = []
    for v, d in enumerate(g.degrees()):
        expected = 1 if g.pinned[v] else 3
        if d != expected:
            issues.append(SkeletonIssue(g.names[v], d, expected))
    return issues
