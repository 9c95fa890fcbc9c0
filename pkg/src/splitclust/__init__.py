"""Overlapping clustering of correlation graphs under vertex splitting.

Vertices of a complete blue/red graph may be split so that the blue edges
fall apart into disjoint cliques; equivalently, vertices may belong to
several clusters.  This package computes, verifies, bounds, shrinks,
approximates and exactly solves such clusterings, and converts instances
to and from multicut with vertex splitting.
"""

from .approx import (
    BipartiteGraph,
    SimpleSolutionParts,
    approximate,
    bipartite_min_vertex_cover,
    candidate_solutions,
)
from .clustering import (
    Clustering,
    RealizedGraph,
    ValidationReport,
    clustering_to_splits,
    cost,
    has_erroneous_cycle,
    parse_clustering,
    splits_to_clustering,
    verify_clustering,
    write_clustering,
)
from .detect import (
    BadStar,
    BadStarForest,
    find_bad_triangle,
    is_bad_star,
    lower_bound,
    maximal_bad_star_forest,
)
from .exact import (
    DEFAULT_VERTEX_CAP,
    SearchBudget,
    SearchLimitReached,
    decide,
    solve_exact,
)
from .graphs import (
    BLUE,
    MAX_VERTICES,
    NEUTRAL,
    RED,
    CorrelationGraph,
    EdgeColor,
    FormatError,
    blue_components,
    cluster_decomposition,
    complete_graph,
    incomplete_graph,
    parse_graph,
    write_graph,
)
from .kernel import (
    KernelResult,
    KernelTranscript,
    Kernelized,
    NoInstance,
    kernelize,
    lift_clustering,
    parse_transcript,
    rule_remove_isolated_cliques,
    write_transcript,
)
from .multicut import (
    MulticutInstance,
    MulticutSolution,
    ccvs_to_mcvs,
    clustering_to_multicut_solution,
    mcvs_to_ccvs,
    multicut_solution_to_clustering,
    parse_multicut_instance,
    parse_multicut_solution,
    verify_multicut_solution,
    write_multicut_instance,
    write_multicut_solution,
)
from .generators import (
    PlainGraph,
    SplitMix64,
    gen_coloring_gadget,
    gen_random,
    gen_vertex_cover_gadget,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "BadStar",
    "BadStarForest",
    "BipartiteGraph",
    "Clustering",
    "CorrelationGraph",
    "DEFAULT_VERTEX_CAP",
    "EdgeColor",
    "FormatError",
    "KernelResult",
    "KernelTranscript",
    "Kernelized",
    "MAX_VERTICES",
    "MulticutInstance",
    "MulticutSolution",
    "NEUTRAL",
    "NoInstance",
    "PlainGraph",
    "RED",
    "RealizedGraph",
    "SearchBudget",
    "SearchLimitReached",
    "SimpleSolutionParts",
    "SplitMix64",
    "ValidationReport",
    "approximate",
    "bipartite_min_vertex_cover",
    "blue_components",
    "candidate_solutions",
    "ccvs_to_mcvs",
    "cluster_decomposition",
    "clustering_to_multicut_solution",
    "clustering_to_splits",
    "complete_graph",
    "cost",
    "decide",
    "find_bad_triangle",
    "gen_coloring_gadget",
    "gen_random",
    "gen_vertex_cover_gadget",
    "has_erroneous_cycle",
    "incomplete_graph",
    "is_bad_star",
    "kernelize",
    "lift_clustering",
    "lower_bound",
    "maximal_bad_star_forest",
    "mcvs_to_ccvs",
    "multicut_solution_to_clustering",
    "parse_clustering",
    "parse_graph",
    "parse_multicut_instance",
    "parse_multicut_solution",
    "parse_transcript",
    "rule_remove_isolated_cliques",
    "solve_exact",
    "splits_to_clustering",
    "verify_clustering",
    "verify_multicut_solution",
    "write_clustering",
    "write_graph",
    "write_multicut_instance",
    "write_multicut_solution",
    "write_transcript",
]
