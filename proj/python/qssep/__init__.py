"""Exact loop polynomials of cyclic permutations."""

from ._core import (
    __version__,
    canonicalize_cycle,
    catalan,
    conjugate_by_adjacent,
    dissection_to_tree,
    enumerate_nc,
    enumerate_trees,
    equivalence_classes,
    format_loop_polynomial,
    free_cumulant_min,
    kreweras,
    loop_polynomial,
    mobius,
    run_cli,
    small_schroeder,
    split_by_transposition,
    tree_partition,
    tree_to_dissection,
    verify,
)

__all__ = [
    "canonicalize_cycle",
    "catalan",
    "conjugate_by_adjacent",
    "dissection_to_tree",
    "enumerate_nc",
    "enumerate_trees",
    "equivalence_classes",
    "format_loop_polynomial",
    "free_cumulant_min",
    "kreweras",
    "loop_polynomial",
    "mobius",
    "run_cli",
    "small_schroeder",
    "split_by_transposition",
    "tree_partition",
    "tree_to_dissection",
    "verify",
]
