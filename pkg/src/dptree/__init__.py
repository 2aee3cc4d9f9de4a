"""Spanning trees that preserve distances from two vertices at once."""

from .graph import (
    GraphFormatError,
    GraphValidationError,
    ValidationReport,
    WeightedGraph,
    induced_subgraph,
    parse_graph,
    serialize_graph,
    validate,
)
from .oracle import (
    EnumerationCapError,
    GenSpec,
    brute_force_common_dp_tree,
    count_common_dp_trees,
    count_spanning_trees,
    enumerate_spanning_trees,
    random_connected_graph,
)
from .paths import DistanceMap, PathWitness, SetDistance, covering_shortest_path, distances_from_set, sssp, unique_shortest_path
from .theorem import (
    BALANCE_CLAUSE,
    COVERING,
    UNIQUE,
    WEIGHT_CLAUSE,
    ConditionReport,
    Construction,
    Partition,
    build_partition,
    check_conditions,
    construct_common_dp_tree,
    potential,
)
from .trees import InvalidTreeError, SpanningTree, parse_tree, serialize_tree, tree_distances, verify_dp_tree
from .weights import SCALE, format_weight, parse_weight

__version__ = "0.1.0"
