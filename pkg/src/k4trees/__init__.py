"""Degree-bounded spanning trees in K4-minor-free graphs."""

from .decomposition import (
    blocks_and_cutvertices,
    find_special_edge,
    is_k4_minor_free,
    is_outerplanar,
    outer_hamiltonian_cycle,
    rooted_block_tree,
)
from .graph_core import (
    Graph,
    InputError,
    InvariantViolation,
    bridges,
    c_pair,
    component_count,
    induced_without,
)
from .n2c_weights import (
    N2C,
    ViolationCertificate,
    WeightAssignment,
    assign_weights,
    counting_lower_bound,
    enumerate_n2cs,
)
from .tree_builder import (
    BuildInstance,
    SpanningTree,
    build,
    build_degree_bounded_tree,
    tree_to_walk,
    verify_tree,
)

__all__ = [
    "BuildInstance", "Graph", "InputError", "InvariantViolation", "N2C",
    "SpanningTree", "ViolationCertificate", "WeightAssignment",
    "assign_weights", "blocks_and_cutvertices", "bridges", "build",
    "build_degree_bounded_tree", "c_pair", "component_count",
    "counting_lower_bound", "enumerate_n2cs", "find_special_edge",
    "induced_without", "is_k4_minor_free", "is_outerplanar",
    "outer_hamiltonian_cycle", "rooted_block_tree", "tree_to_walk",
    "verify_tree",
]
