"""Colouring toolkit for graphs with forbidden induced P3+P2, P4+P2, 2K2 and diamond."""

from .colouring import (
    BoundSpec,
    Colouring,
    bound_for_class,
    chromatic_number_exact,
    colour_2k2_diamond,
    colour_cograph,
    colour_disjoint_cliques,
    colour_p3p2,
    colour_p3p2_diamond,
    colour_p4p2,
    verify_colouring,
    wagon_colouring,
)
from .errors import CapabilityError, ClaimViolation, InputError
from .graph import Graph, complement, disjoint_union, fig5_blowup, fixture, induced_subgraph, join, multiply_vertex
from .harness import SweepConfig, SweepReport, generate_class_instances, run_suite
from .partition import WagonPartition, build_partition, check_claims, clique_number, max_clique_exact
from .recognition import GraphClass, Pattern, Witness, check_class, find_induced, is_perfect_small

__all__ = [
    "BoundSpec", "CapabilityError", "ClaimViolation", "Colouring", "Graph", "GraphClass", "InputError",
    "Pattern", "SweepConfig", "SweepReport", "WagonPartition", "Witness", "bound_for_class",
    "build_partition", "check_claims", "check_class", "chromatic_number_exact", "clique_number",
    "colour_2k2_diamond", "colour_cograph", "colour_disjoint_cliques", "colour_p3p2", "colour_p3p2_diamond",
    "colour_p4p2", "complement", "disjoint_union", "fig5_blowup", "find_induced", "fixture",
    "generate_class_instances", "induced_subgraph", "is_perfect_small", "join", "max_clique_exact",
    "multiply_vertex", "run_suite", "verify_colouring", "wagon_colouring",
]
