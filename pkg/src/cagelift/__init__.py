"""Biregular (3,m;g)-graphs from Z_m voltage-graph lifts and remote-vertex gluing."""

from .analysis import (
    INFINITE,
    GraphReport,
    analyze,
    degree_histogram,
    diameter,
    distance,
    girth,
    is_bipartite,
    remote_pairs,
)
from .constructions import (
    ConstructionSpec,
    build_G6,
    build_G8,
    build_G10,
    build_G12,
    build_H10,
    build_H12,
    build_K33,
    build_tree_T4t,
    build_tree_T4t2,
)
from .errors import CageLiftError
from .identification import IdentifySpec, corollary_order, identify
from .io import export_dot, read_graph6, read_voltage_graph, write_graph6, write_voltage_graph
from .search import SearchProblem, SearchResult, search
from .voltage import Arc, SimpleGraph, VoltageGraph, lift, new_voltage_graph, validate_semicubic_skeleton
from .walks import (
    ClosedWalk,
    GirthCertificate,
    LollipopWalk,
    certify,
    enumerate_closed_walks,
    enumerate_cycles,
    enumerate_lollipops,
    enumerate_pinned_paths,
    g8_condition,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "Arc",
    "CageLiftError",
    "ClosedWalk",
    "ConstructionSpec",
    "GirthCertificate",
    "GraphReport",
    "IdentifySpec",
    "LollipopWalk",
    "SearchProblem",
    "SearchResult",
    "SimpleGraph",
    "VoltageGraph",
    "analyze",
    "build_G6",
    "build_G8",
    "build_G10",
    "build_G12",
    "build_H10",
    "build_H12",
    "build_K33",
    "build_tree_T4t",
    "build_tree_T4t2",
    "certify",
    "corollary_order",
    "degree_histogram",
    "diameter",
    "distance",
    "enumerate_closed_walks",
    "enumerate_cycles",
    "enumerate_lollipops",
    "enumerate_pinned_paths",
    "export_dot",
    "g8_condition",
    "girth",
    "identify",
    "is_bipartite",
    "lift",
    "new_voltage_graph",
    "read_graph6",
    "read_voltage_graph",
    "remote_pairs",
    "search",
    "validate_semicubic_skeleton",
    "write_graph6",
    "write_voltage_graph",
]
