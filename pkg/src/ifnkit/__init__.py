"""ifnkit: signatures for ideal flow networks.

An ideal flow network is a strongly connected directed graph whose integer
link flows balance at every node.  Its signature is a formal sum of weighted
canonical cycles — a string like ``"a + abcd + 3b + bd"`` — that composes to
the flow matrix and can be recovered from it.  This package provides the
algebra between the two representations, exact rational flow statistics,
generators, and a CLI plus HTTP service.
"""
from .algebra import assign, compose, equivalence_factor, merge, scale_network
from .analysis import (
    RationalMatrix,
    RelationClass,
    classify_relation,
    column_sums,
    inflow_stochastic,
    is_ideal_flow,
    is_irreducible_matrix,
    is_irreducible_signature,
    is_premagic,
    link_flow,
    network_inflow_stochastic,
    network_outflow_stochastic,
    network_probability_matrix,
    network_total_flow,
    node_flow_sum,
    outflow_stochastic,
    probability_matrix,
    row_sums,
    scc_count,
    total_flow,
    unbalanced_nodes,
)
from .core import (
    CanonicalCycle,
    FlowNetwork,
    Signature,
    Term,
    canonicalize_cycle,
    normalize_signature,
    validate_label,
)
from .cycles import (
    DEFAULT_CYCLE_BUDGET,
    LinkCycleSystem,
    Pivot,
    build_link_cycle_system,
    enumerate_canonical_cycles,
    find_pivots,
    strongly_connected_components,
)
from .decompose import (
    CycleWeights,
    NonIntegerWitness,
    greedy_decompose,
    linear_decompose,
    solve_cycle_weights,
    verify_decomposition,
)
from .errors import (
    CycleBudgetExceeded,
    DimensionMismatch,
    DuplicateNodeInCycle,
    EmptyCycle,
    EmptySignature,
    IfnError,
    InfeasibleKappa,
    NegativeCoefficient,
    NegativeFlowResult,
    NotIrreducible,
    NotPremagic,
    NotStochastic,
    SignatureSyntaxError,
    UnknownLink,
)
from .generators import (
    complete_support,
    default_node_labels,
    markov_to_integer_ifn,
    premier_network,
    random_ifn,
    stationary_distribution,
)
from .sigtext import parse_signature, render_path, render_signature

__version__ = "0.1.0"

__all__ = [
    "CanonicalCycle",
    "CycleBudgetExceeded",
    "CycleWeights",
    "DEFAULT_CYCLE_BUDGET",
    "DimensionMismatch",
    "DuplicateNodeInCycle",
    "EmptyCycle",
    "EmptySignature",
    "FlowNetwork",
    "IfnError",
    "InfeasibleKappa",
    "LinkCycleSystem",
    "NegativeCoefficient",
    "NegativeFlowResult",
    "NonIntegerWitness",
    "NotIrreducible",
    "NotPremagic",
    "NotStochastic",
    "Pivot",
    "RationalMatrix",
    "RelationClass",
    "Signature",
    "SignatureSyntaxError",
    "Term",
    "UnknownLink",
    "assign",
    "build_link_cycle_system",
    "canonicalize_cycle",
    "classify_relation",
    "column_sums",
    "complete_support",
    "compose",
    "default_node_labels",
    "enumerate_canonical_cycles",
    "equivalence_factor",
    "find_pivots",
    "greedy_decompose",
    "inflow_stochastic",
    "is_ideal_flow",
    "is_irreducible_matrix",
    "is_irreducible_signature",
    "is_premagic",
    "linear_decompose",
    "link_flow",
    "markov_to_integer_ifn",
    "merge",
    "network_inflow_stochastic",
    "network_outflow_stochastic",
    "network_probability_matrix",
    "network_total_flow",
    "node_flow_sum",
    "normalize_signature",
    "outflow_stochastic",
    "parse_signature",
    "premier_network",
    "probability_matrix",
    "random_ifn",
    "render_path",
    "render_signature",
    "row_sums",
    "scale_network",
    "scc_count",
    "solve_cycle_weights",
    "stationary_distribution",
    "strongly_connected_components",
    "total_flow",
    "unbalanced_nodes",
    "validate_label",
    "verify_decomposition",
]
