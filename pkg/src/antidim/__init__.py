"""Antiresolving sets, k-metric antidimension and (k, l)-anonymity of graphs.

The package measures how well a published graph resists active
re-identification attacks: a k-antiresolving set hides every outside vertex
among at least k-1 metrically indistinguishable peers, and the smallest such
set for each k quantifies the attacker budget needed to break anonymity.
"""

from .anonymity import AnonymityResult, Confidence, evaluate, single_vertex_scan
from .closure import (
    AdimBound,
    BasisOutcome,
    SearchOutcome,
    Verdict,
    adim_upper_bound,
    closure_f,
    find_antiresolving_basis,
    find_antiresolving_set,
)
from .experiments import (
    K_EQUALS_ORDER,
    ExperimentConfig,
    ExperimentReport,
    audit_social_graph,
    run_success_rate_study,
)
from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    family_f_tree,
    from_edge_list,
    generate,
    path_graph,
    random_graph,
    read_edge_list,
    star_graph,
    write_edge_list,
)
from .oracle import AntidimSpectrum, brute_adim, enumerate_connected_graphs, spectrum
from .partition import (
    MetricPartition,
    antiresolving_k,
    is_k_antiresolving,
    partition,
    representation,
)
from .structure import (
    EccentricityProfile,
    antidimensional_lower_bound,
    closed_form_adim,
    eccentricity_profile,
    twin_classes,
)
from .trees import (
    BranchProfile,
    branch_profile,
    is_tree,
    tree_adim_upper_bound,
    tree_antidimensional_bound,
    xi_of_tree,
)

__version__ = "0.1.0"

__all__ = [
    "AdimBound",
    "AnonymityResult",
    "AntidimSpectrum",
    "BasisOutcome",
    "BranchProfile",
    "Confidence",
    "DistanceMatrix",
    "EccentricityProfile",
    "ExperimentConfig",
    "ExperimentReport",
    "Graph",
    "GraphError",
    "K_EQUALS_ORDER",
    "MetricPartition",
    "SearchOutcome",
    "Verdict",
    "adim_upper_bound",
    "all_pairs_distances",
    "antidimensional_lower_bound",
    "antiresolving_k",
    "audit_social_graph",
    "branch_profile",
    "brute_adim",
    "closed_form_adim",
    "closure_f",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "eccentricity_profile",
    "enumerate_connected_graphs",
    "evaluate",
    "family_f_tree",
    "find_antiresolving_basis",
    "find_antiresolving_set",
    "from_edge_list",
    "generate",
    "is_k_antiresolving",
    "is_tree",
    "partition",
    "path_graph",
    "random_graph",
    "read_edge_list",
    "representation",
    "run_success_rate_study",
    "single_vertex_scan",
    "spectrum",
    "star_graph",
    "tree_adim_upper_bound",
    "tree_antidimensional_bound",
    "twin_classes",
    "write_edge_list",
    "xi_of_tree",
]
