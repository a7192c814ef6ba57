"""Graph data structures, parsing and structural decompositions."""
from .edge import Edge
from .graph import Graph
from .parse import parse_edge_list, read_edge_list
from .paths import DegreeTwoPath, maximal_degree_two_paths
from .structure import (
    Block,
    BlockCutForest,
    GraphStats,
    PrunedTree,
    TwoCore,
    almost_tree_parameter,
    biconnected_components,
    connected_components,
    cyclomatic_number,
    stats,
    two_core,
)

__all__ = [
    "Edge", "Graph", "parse_edge_list", "read_edge_list",
    "DegreeTwoPath", "maximal_degree_two_paths",
    "Block", "BlockCutForest", "GraphStats", "PrunedTree", "TwoCore",
    "almost_tree_parameter", "biconnected_components", "connected_components",
    "cyclomatic_number", "stats", "two_core",
]
