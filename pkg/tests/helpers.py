"""Shared generators and cached oracles for the test suite."""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx

from cagelift.analysis import girth
from cagelift.constructions import build_G6, build_G8, build_G10, build_G12, build_H10, build_H12
from cagelift.errors import LiftCollision
from cagelift.voltage import SimpleGraph, VoltageGraph, lift, new_voltage_graph

# (name, builder, target girth, number of pinned vertices, unpinned vertices)
CONSTRUCTIONS = [
    ("G6", lambda: build_G6(1, 2), 6, 2, 4),
    ("G8", lambda: build_G8(1, 2, 2, 1), 8, 3, 9),
    ("G10", build_G10, 10, 2, 24),
    ("H10", build_H10, 10, 2, 20),
    ("G12", build_G12, 12, 3, 49),
    ("H12", build_H12, 12, 3, 41),
]
BUILDERS = {name: build for name, build, *_ in CONSTRUCTIONS}


@lru_cache(maxsize=None)
def construction(name: str) -> VoltageGraph:
    return BUILDERS[name]()


@lru_cache(maxsize=None)
def lifted(name: str, m: int) -> SimpleGraph:
    return lift(construction(name), m)


@lru_cache(maxsize=None)
def brute_girth(name: str, m: int) -> float:
    return girth(lifted(name, m))


def brute_girth_of(g: VoltageGraph, m: int) -> float:
    """Girth of the lift, with a non-simple lift counted as girth 2."""
    try:
        return girth(lift(g, m))
    except LiftCollision:
        return 2


def to_networkx(g: SimpleGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def adjacency_sets(g: SimpleGraph) -> list[set[int]]:
    return [set(nb) for nb in g.adjacency]


def random_voltage_graph(
    rng: random.Random,
    max_unpinned: int = 7,
    max_pinned: int = 3,
    multi: bool = False,
    voltage_bound: int = 5,
) -> VoltageGraph:
    """Random connected voltage graph with at least one pinned vertex.

    With ``multi`` the graph may also contain parallel arcs and loops, whose
    lifts can collide.
    """
    n = rng.randint(3, max_unpinned)
    p = rng.randint(1, max_pinned)
    names = [f"v{i}" for i in range(n)] + [f"p{i}*" for i in range(p)]
    pairs = set()
    for i in range(1, n):
        pairs.add((rng.randrange(i), i))
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2)
        pairs.add((min(a, b), max(a, b)))
    arcs = []
    for a, b in sorted(pairs):
        if rng.random() < 0.5:
            a, b = b, a
        arcs.append((names[a], names[b], rng.randint(-voltage_bound, voltage_bound)))
    if multi:
        for _ in range(rng.randint(0, 2)):
            a, b = rng.choice(sorted(pairs))
            arcs.append((names[a], names[b], rng.randint(-voltage_bound, voltage_bound)))
        if rng.random() < 0.3:
            v = names[rng.randrange(n)]
            arcs.append((v, v, rng.randint(-voltage_bound, voltage_bound)))
    for j in range(p):
        for w in rng.sample(range(n), rng.randint(1, min(2, n))):
            if rng.random() < 0.5:
                arcs.append((names[n + j], names[w], 0))
            else:
                arcs.append((names[w], names[n + j], 0))
    return new_voltage_graph([(x, x.endswith("*")) for x in names], arcs, "random")


def random_simple_graph(rng: random.Random, max_n: int = 40) -> SimpleGraph:
    n = rng.randint(0, max_n)
    density = rng.random()
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < density]
    return SimpleGraph.from_edges(n, edges)
