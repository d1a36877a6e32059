"""The named voltage graphs and base cages.

Vertex names are bit strings: the tree hanging from pinned root ``x*`` has
root ``x``, children ``x_0`` and ``x_1``,
grandchildren ``x_00`` ... and so on.  Tree edges are arcs from parent to
child with voltage 0; the connecting edges between trees run from the ``x``
side.

Builders never check whether their voltages give the advertised girth; that
is the certifier's job, so bad parameters stay constructible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .voltage import SimpleGraph, VoltageGraph, new_voltage_graph

FAMILIES = ("G6", "G8", "G10", "H10", "G12", "H12", "T4t2", "T4t", "K33")

# Voltage on H12's arc x_0111 -> z_011.  Two values circulate; 5 leaves a
# zero-sum 6-cycle at every m, -1 reaches girth 12 from m = 10 on.
H12_V_DEFAULT = -1
H12_V_ALTERNATE = 5


def vertex_name(side: str, bits: str) -> str:
    return f"{side}_{bits}" if bits else side


def _bitstrings(max_len: int):
    for length in range(1, max_len + 1):
        for bits in product("01", repeat=length):
            yield "".join(bits)


class _Builder:
    def __init__(self):
        self.vertices: list[tuple[str, bool]] = []
        self.arcs: list[tuple[str, str, int]] = []

    def tree(self, side: str, depth: int, pruned_prefix: str | None, keep_prefix_node: bool = True):
        """Pinned root ``side*`` over a binary tree of bit strings up to ``depth``.

        Strings strictly extending ``pruned_prefix`` are dropped; the prefix
        itself is dropped too unless ``keep_prefix_node``.
        """
        self.vertices.append((side + "*", True))
        self.vertices.append((side, False))
        self.arcs.append((side + "*", side, 0))
        for bits in _bitstrings(depth):
            if pruned_prefix is not None and bits.startswith(pruned_prefix):
                if len(bits) > len(pruned_prefix) or not keep_prefix_node:
                    continue
            self.vertices.append((vertex_name(side, bits), False))
            self.arcs.append((vertex_name(side, bits[:-1]), vertex_name(side, bits), 0))

    def drop(self, names):
        gone = set(names)
        self.vertices = [v for v in self.vertices if v[0] not in gone]
        self.arcs = [a for a in self.arcs if a[0] not in gone and a[1] not in gone]

    def build(self, description: str) -> VoltageGraph:
        return new_voltage_graph(self.vertices, self.arcs, description)


def _add_pruned_x_tree(b: _Builder, side: str, t: int, single_child: str = "1"):
    """The tree X_t: height 2t below the pinned root, minus the left subtree of ``side_a``.

    For t = 1 the tree is a path ``side* - side - side_c``.  G6 keeps child
    ``0`` and the G8 subtrees keep child ``1``; ``single_child`` picks ``c``.
    """
    if t == 1:
        pruned = "1" if single_child == "0" else "0"
    else:
        pruned = "0" * t
    b.tree(side, 2 * t - 1, pruned, keep_prefix_node=False)


def build_tree_T4t2(t: int, single_child: str = "0") -> VoltageGraph:
    """Two pruned trees X_t, Y_t joined by a voltage-0 edge ``x_a -> y_a``, ``a = 0^(t-1)``."""
    if t < 1:
        raise ValueError("T_{4t+2} needs t >= 1")
    b = _Builder()
    _add_pruned_x_tree(b, "x", t, single_child)
    _add_pruned_x_tree(b, "y", t, single_child)
    a = "0" * (t - 1)
    b.arcs.append((vertex_name("x", a), vertex_name("y", a), 0))
    return b.build(f"tree T_{4 * t + 2}")


def build_tree_T4t(t: int) -> VoltageGraph:
    """X'_t with leaf ``x_a`` (``a = 0^(t-1)``) joined to the roots-side vertices ``y_a'``, ``z_a'`` of Y_{t-1}, Z_{t-1}."""
    if t < 2:
        raise ValueError("T_{4t} needs t >= 2")
    b = _Builder()
    a = "0" * (t - 1)
    b.tree("x", 2 * t - 2, a, keep_prefix_node=True)
    _add_pruned_x_tree(b, "y", t - 1, single_child="1")
    _add_pruned_x_tree(b, "z", t - 1, single_child="1")
    a2 = "0" * (t - 2)
    b.arcs.append((vertex_name("x", a), vertex_name("y", a2), 0))
    b.arcs.append((vertex_name("x", a), vertex_name("z", a2), 0))
    return b.build(f"tree T_{4 * t}")


def _extend(tree: VoltageGraph, arcs, description: str, drop=()) -> VoltageGraph:
    b = _Builder()
    b.vertices = list(zip(tree.names, tree.pinned))
    b.arcs = [tree.arc_names(k) for k in range(len(tree.arcs))]
    b.drop(drop)
    b.arcs.extend(arcs)
    return b.build(description)


def build_G6(alpha: int, beta: int) -> VoltageGraph:
    return _extend(
        build_tree_T4t2(1),
        [("x_0", "y_0", alpha), ("x_0", "y_0", beta)],
        f"G6 alpha={alpha} beta={beta}",
    )


def build_G8(alpha: int, beta: int, gamma: int, delta: int) -> VoltageGraph:
    return _extend(
        build_tree_T4t(2),
        [
            ("x_10", "y_1", alpha),
            ("x_10", "z_1", beta),
            ("x_11", "y_1", gamma),
            ("x_11", "z_1", delta),
        ],
        f"G8 alpha={alpha} beta={beta} gamma={gamma} delta={delta}",
    )


G10_ARCS = [
    ("x_010", "y_010", 1),
    ("x_010", "y_111", 2),
    ("x_011", "y_011", 2),
    ("x_011", "y_110", 1),
    ("x_100", "y_010", 2),
    ("x_100", "y_101", 1),
    ("x_101", "y_011", 1),
    ("x_101", "y_100", 2),
    ("x_110", "y_110", 2),
    ("x_110", "y_111", 1),
    ("x_111", "y_100", 3),
    ("x_111", "y_101", 0),
]


def build_G10() -> VoltageGraph:
    return _extend(build_tree_T4t2(2), G10_ARCS, "G10")


H10_DROPPED = ("x_100", "x_111", "y_100", "y_111")
H10_ARCS = [
    ("x_10", "y_10", 1),
    ("x_11", "y_11", 2),
    ("x_010", "y_010", 2),
    ("x_010", "y_110", 1),
    ("x_011", "y_101", 2),
    ("x_011", "y_011", 3),
    ("x_110", "y_110", 3),
    ("x_110", "y_011", 1),
    ("x_101", "y_010", 5),
    ("x_101", "y_101", 3),
]


def build_H10() -> VoltageGraph:
    return _extend(build_tree_T4t2(2), H10_ARCS, "H10", drop=H10_DROPPED)


# x_1011 (not a second x_1001) on the eighth y-arc: every leaf needs degree 3
G12_ARCS = [
    ("x_0100", "y_010", 1),
    ("x_0101", "y_011", 2),
    ("x_0110", "y_100", 1),
    ("x_0111", "y_101", 2),
    ("x_1000", "y_010", 2),
    ("x_1001", "y_011", 1),
    ("x_1010", "y_110", 1),
    ("x_1011", "y_111", 2),
    ("x_1100", "y_100", 2),
    ("x_1101", "y_101", 1),
    ("x_1110", "y_110", 3),
    ("x_1111", "y_111", -1),
    ("x_0100", "z_110", 2),
    ("x_0101", "z_111", 1),
    ("x_0110", "z_100", -1),
    ("x_0111", "z_101", 3),
    ("x_1000", "z_010", -1),
    ("x_1001", "z_011", 3),
    ("x_1010", "z_100", 1),
    ("x_1011", "z_101", -1),
    ("x_1100", "z_010", -3),
    ("x_1101", "z_011", -2),
    ("x_1110", "z_110", -1),
    ("x_1111", "z_111", 2),
]


def build_G12() -> VoltageGraph:
    return _extend(build_tree_T4t(3), G12_ARCS, "G12")


H12_DROPPED = ("x_1000", "x_1001", "x_1100", "x_1101", "y_100", "y_111", "z_100", "z_111")


def h12_arcs(v: int = H12_V_DEFAULT) -> list[tuple[str, str, int]]:
    # every arc starts at a surviving leaf; the letters are the customary arc names
    return [
        ("x_100", "y_10", 1),  # a
        ("x_100", "z_10", -1),  # b
        ("x_110", "y_11", -1),  # c
        ("x_110", "z_11", 1),  # d
        ("x_0100", "y_010", 2),  # e
        ("x_0101", "y_011", 1),  # j
        ("x_0110", "y_101", -1),  # q
        ("x_0111", "y_110", 1),  # u
        ("x_1010", "y_110", -2),  # w
        ("x_1011", "y_101", -3),  # s
        ("x_1110", "y_011", 2),  # l
        ("x_1111", "y_010", 1),  # g
        ("x_0100", "z_101", 1),  # f
        ("x_0101", "z_110", -2),  # k
        ("x_0110", "z_010", 1),  # r
        ("x_0111", "z_011", v),  # v
        ("x_1010", "z_010", 2),  # alpha
        ("x_1011", "z_011", -6),  # t
        ("x_1110", "z_101", -2),  # p
        ("x_1111", "z_110", 2),  # h
    ]


def build_H12(v: int = H12_V_DEFAULT) -> VoltageGraph:
    return _extend(build_tree_T4t(3), h12_arcs(v), f"H12 v={v}", drop=H12_DROPPED)


def build_K33() -> SimpleGraph:
    return SimpleGraph.from_edges(
        6, [(i, j) for i in range(3) for j in range(3, 6)], ["a0", "a1", "a2", "b0", "b1", "b2"]
    )


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    t: int | None = None
    params: tuple[int, ...] = field(default_factory=tuple)
    h12_v: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family == "T4t2" and (self.t is None or self.t < 1):
            raise ValueError("T4t2 needs t >= 1")
        if self.family == "T4t" and (self.t is None or self.t < 2):
            raise ValueError("T4t needs t >= 2")
        wanted = {"G6": 2, "G8": 4}.get(self.family, 0)
        if len(self.params) != wanted:
            raise ValueError(f"{self.family} takes {wanted} voltage parameter(s), got {len(self.params)}")
        if self.h12_v is not None and self.family != "H12":
            raise ValueError("h12_v only applies to H12")

    def build(self):
        f = self.family
        if f == "G6":
            return build_G6(*self.params)
        if f == "G8":
            return build_G8(*self.params)
        if f == "H12":
            return build_H12(H12_V_DEFAULT if self.h12_v is None else self.h12_v)
        if f == "T4t2":
            return build_tree_T4t2(self.t)
        if f == "T4t":
            return build_tree_T4t(self.t)
        return {"G10": build_G10, "H10": build_H10, "G12": build_G12, "K33": build_K33}[f]()


# target girth and number of pinned vertices of each named family
FAMILY_GIRTH = {"G6": 6, "G8": 8, "G10": 10, "H10": 10, "G12": 12, "H12": 12}
