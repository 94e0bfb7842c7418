"""Exact solving and verification toolkit for 2-rainbow independent domination."""

from .graph import (
    Edge,
    Graph,
    Graph6Error,
    cycle_graph,
    diameter,
    double_star,
    emit_graph6,
    metrics,
    parse_graph6,
    path_graph,
    remove_edge,
    remove_vertex,
    remove_vertices,
    star_graph,
    subdivision,
)
from .enumeration import enumerate_free_trees, random_tree
from .gadgets import GadgetKind, attach_gadget, build_spider
from .isomorphism import trees_isomorphic
from .solver import (
    CapExceeded,
    ColorConstraint,
    SolveOutcome,
    enumerate_min_functions,
    gamma,
    gamma_bruteforce,
    gamma_tree_dp,
    gamma_weight,
    independent_domination,
    is_2ridf,
    w_zero,
)
from .perturbation import (
    EdgeWitness,
    RemovalProfile,
    edge_removal_profile,
    edgedel_witness,
    is_er_critical,
    is_stable,
    vertex_removal_profile,
)
from .recognizers import (
    FamilyTCertificate,
    SideConditionError,
    SubdivisionPreimage,
    recognize_family_F,
    recognize_family_T,
    replay_certificate,
)
from .suites import SUITES, SuiteReport

__all__ = [
    "CapExceeded",
    "ColorConstraint",
    "Edge",
    "EdgeWitness",
    "FamilyTCertificate",
    "GadgetKind",
    "Graph",
    "Graph6Error",
    "RemovalProfile",
    "SideConditionError",
    "SolveOutcome",
    "SubdivisionPreimage",
    "SuiteReport",
    "SUITES",
    "attach_gadget",
    "build_spider",
    "cycle_graph",
    "diameter",
    "double_star",
    "edge_removal_profile",
    "edgedel_witness",
    "emit_graph6",
    "enumerate_free_trees",
    "enumerate_min_functions",
    "gamma",
    "gamma_bruteforce",
    "gamma_tree_dp",
    "gamma_weight",
    "independent_domination",
    "is_2ridf",
    "is_er_critical",
    "is_stable",
    "metrics",
    "parse_graph6",
    "path_graph",
    "random_tree",
    "recognize_family_F",
    "recognize_family_T",
    "remove_edge",
    "remove_vertex",
    "remove_vertices",
    "replay_certificate",
    "star_graph",
    "subdivision",
    "trees_isomorphic",
    "vertex_removal_profile",
    "w_zero",
]
