"""Centrality measures on small undirected graphs, and machine-checked axioms about them."""

from .axioms import (
    Axiom,
    AxiomVerdict,
    CheckConfig,
    Status,
    Witness,
    check_axiom,
    check_diminishing_impact,
    check_edge_monotonicity,
    check_isolated_minima,
    check_isomorphic_invariance,
    check_locality,
    check_structural_consistency,
    dominating_injection_exists,
    run_axiom_suite,
    verify_witness,
)
from .errors import (
    BudgetExceeded,
    CentralityLabError,
    ConvergenceFailure,
    DuplicateEdge,
    InvalidArguments,
    InvalidNode,
    InvalidParameter,
    NotAPermutation,
    ParseError,
    SelfLoop,
    UnknownFixture,
    UnknownMeasure,
)
from .fixtures import FIXTURE_IDS, Fixture, paper_fixture, replay_fixture
from .graph import (
    Graph,
    add_edge,
    build_graph,
    connected_components,
    degree,
    distance_matrix,
    hop_partition_node,
    hop_partition_pair,
    induced_component,
    shortest_distances,
    shortest_path_counts,
)
from .graphio import parse_graph, read_graph, serialize_graph, write_graph
from .isomorphism import NodeBijection, apply_permutation, are_isomorphic, canonical_form, enumerate_graphs
from .measures import (
    MEASURE_NAMES,
    CentralityVector,
    EigenResult,
    MeasureHandle,
    betweenness_centrality,
    betweenness_oracle,
    closeness_centrality,
    compare_ddc_lex,
    ddc_profile,
    decaying_degree_centrality,
    degree_centrality,
    eigenvector_centrality,
    eigenvector_centrality_result,
    get_measure,
    measure_registry,
    uniform_centrality,
    weighted_degree_centrality,
)
from .search import SatisfiabilityMatrix, SearchBudget, build_satisfiability_matrix, find_counterexample
from .report import render_report

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "AxiomVerdict",
    "BudgetExceeded",
    "CentralityLabError",
    "CentralityVector",
    "CheckConfig",
    "ConvergenceFailure",
    "DuplicateEdge",
    "EigenResult",
    "FIXTURE_IDS",
    "Fixture",
    "Graph",
    "InvalidArguments",
    "InvalidNode",
    "InvalidParameter",
    "MEASURE_NAMES",
    "MeasureHandle",
    "NodeBijection",
    "NotAPermutation",
    "ParseError",
    "SatisfiabilityMatrix",
    "SearchBudget",
    "SelfLoop",
    "Status",
    "UnknownFixture",
    "UnknownMeasure",
    "Witness",
    "add_edge",
    "apply_permutation",
    "are_isomorphic",
    "betweenness_centrality",
    "betweenness_oracle",
    "build_graph",
    "build_satisfiability_matrix",
    "canonical_form",
    "check_axiom",
    "check_diminishing_impact",
    "check_edge_monotonicity",
    "check_isolated_minima",
    "check_isomorphic_invariance",
    "check_locality",
    "check_structural_consistency",
    "closeness_centrality",
    "compare_ddc_lex",
    "connected_components",
    "ddc_profile",
    "decaying_degree_centrality",
    "degree",
    "degree_centrality",
    "distance_matrix",
    "dominating_injection_exists",
    "eigenvector_centrality",
    "eigenvector_centrality_result",
    "enumerate_graphs",
    "find_counterexample",
    "get_measure",
    "hop_partition_node",
    "hop_partition_pair",
    "induced_component",
    "measure_registry",
    "paper_fixture",
    "parse_graph",
    "read_graph",
    "render_report",
    "replay_fixture",
    "run_axiom_suite",
    "serialize_graph",
    "shortest_distances",
    "shortest_path_counts",
    "uniform_centrality",
    "verify_witness",
    "weighted_degree_centrality",
    "write_graph",
]
