"""Exact range distributions and dominance scans for tree-indexed random walks."""

from .counting import (
    RangeDistribution,
    WalkModel,
    count_bounded,
    endpoint_difference_distribution,
    f_start_count,
    profile,
    range_classes,
    range_distribution,
    transfer,
)
from .trees import (
    RootedTree,
    Tree,
    TreeError,
    TreeParseError,
    generate_free_trees,
    make_path,
    make_spider,
    make_star,
    parse_tree,
    reroot,
)

__all__ = [
    "RangeDistribution",
    "RootedTree",
    "Tree",
    "TreeError",
    "TreeParseError",
    "WalkModel",
    "count_bounded",
    "endpoint_difference_distribution",
    "f_start_count",
    "generate_free_trees",
    "make_path",
    "make_spider",
    "make_star",
    "parse_tree",
    "profile",
    "range_classes",
    "range_distribution",
    "reroot",
    "transfer",
]
