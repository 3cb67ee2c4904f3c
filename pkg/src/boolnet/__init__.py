"""Signed local interaction graphs, circuits and fixed points of Boolean networks."""
from .circuits import (
    Circuit,
    EnumerationTooLarge,
    common_negative_circuit,
    enumerate_circuits,
    has_negative_circuit,
    has_positive_circuit,
    positive_circuits_all_through,
)
from .core import (
    BooleanNetwork,
    ParseError,
    State,
    UsageError,
    complement,
    evaluate,
    flip,
    hamming,
    permute_coordinates,
    restrict,
)
from .dynamics import (
    OppositionPair,
    check_hypothesis_H,
    check_lemma1,
    claim4_witness,
    extract_permutation,
    fixed_points,
    has_property_P,
    opposition_pairs,
    trajectory,
)
from .jacobian import SignedDigraph, is_subgraph, local_graph, out_degree, partial_derivative, predecessors
from .theorems import TheoremReport, check, mirror

__version__ = "0.1.0"
