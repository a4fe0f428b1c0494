"""Exact finite-simple-graph toolkit.

Canonical immutable graphs, exact parameters (alpha, omega, chi) with
witnesses, replication / expansion / separation constructions, a
certifying clique-cover pipeline for perfect graphs, independent
brute-force oracles, and exhaustive small-graph theorem sweeps.
"""

from .core import (
    Cover,
    Graph,
    Vertex,
    VertexSet,
    complement,
    induced_subgraph,
    is_induced_subgraph,
    make_graph,
    union_over,
    vertex_set,
)
from .constructions import (
    ExpansionWitness,
    ReplicationWitness,
    Separation,
    build_separated_graph,
    expand,
    mk_disj,
    replicate,
    verify_expansion,
    verify_replication,
)
from .errors import (
    DanglingEdgeError,
    EmptyGraphError,
    GraphError,
    InvalidColoringError,
    NotAStableCoverError,
    NotSubsetError,
    ParseError,
    PartialMapError,
    SelfLoopError,
    TooLargeError,
    VertexNotFoundError,
    ZeroMultiplicityError,
)
from .formats import GraphDocument, emit_graph, parse_graph, relabel_graph
from .invariants import (
    Coloring,
    GraphParameters,
    check_cover,
    chromatic_number,
    clique_number,
    coloring_to_cover,
    colors_used,
    cover_to_coloring,
    graph_parameters,
    imperfection_witness,
    is_clique,
    is_nice,
    is_perfect,
    is_stable,
    is_valid_coloring,
    max_clique_witness,
    max_stable_sets,
    max_stable_witness,
    stable_number,
)
from .iso import IsoWitness, compose_witnesses, find_isomorphism, verify_iso_witness, verify_morph
from .oracles import (
    enumerate_graphs,
    find_odd_hole_or_antihole,
    is_berge,
    oracle_parameters,
)
from .pipeline import (
    PerfectnessFailure,
    WpgtCertificate,
    clique_cover_alpha,
    imperfection_failure,
    intersecting_clique,
    recheck_failure,
    verify_certificate,
    wpgt_certificate,
)
from .sweeps import Counterexample, SweepReport, sweep

__version__ = "0.1.0"
