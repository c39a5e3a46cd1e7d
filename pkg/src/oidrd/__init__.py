"""Exact computation and verification of outer independent double Roman domination."""

from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    build,
    corona,
    family,
    gadget,
    is_connected,
    parse_family_spec,
)
from .labeling import ClassPartition, Labeling, LabelingError, classes, is_drd, is_oidrd, is_oird, is_rd, weight
from .solver import (
    InvariantBundle,
    SolveResult,
    brute_force_oidrd,
    bundle,
    enumerate_optimal_oidrd,
    enumerate_optimal_oir,
    solve_alpha,
    solve_beta,
    solve_gamma,
    solve_gamma_dr,
    solve_gamma_oir,
    solve_gamma_r,
    solve_oidrd,
)

__all__ = [
    "FamilySpec",
    "Graph",
    "GraphError",
    "build",
    "corona",
    "family",
    "gadget",
    "is_connected",
    "parse_family_spec",
    "ClassPartition",
    "Labeling",
    "LabelingError",
    "classes",
    "is_drd",
    "is_oidrd",
    "is_oird",
    "is_rd",
    "weight",
    "InvariantBundle",
    "SolveResult",
    "brute_force_oidrd",
    "bundle",
    "enumerate_optimal_oidrd",
    "enumerate_optimal_oir",
    "solve_alpha",
    "solve_beta",
    "solve_gamma",
    "solve_gamma_dr",
    "solve_gamma_oir",
    "solve_gamma_r",
    "solve_oidrd",
]
