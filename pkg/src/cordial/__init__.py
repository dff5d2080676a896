"""Cordiality toolkit for digraphs and graph orientations.

Checks (2,3)-cordial labelings of digon-free digraphs, decides
(2,3)-orientability of undirected graphs with constructive witnesses,
runs symmetry-reduced exhaustive searches, generalizes the labeling
calculus to quasigroup operation tables, and evaluates edge-count
bounds.  A CLI (``cordial`` / ``python -m cordial``) exposes the same
operations plus a bundled verification suite.
"""

from .bounds import (
    BoundCheckReport,
    BoundsRecord,
    bichromatic_capacity,
    bounds_record,
    complete_graph_zero_excess,
    max_edges,
    verify_bound,
    z_value,
)
from .engine import (
    LabelingReport,
    OrientabilityWitness,
    arc_label,
    construct_witness_orientation,
    gamma_triple,
    is_balanced_triple,
    is_cordial,
    is_friendly,
    is_orientable,
    lambda_count,
)
from .graphs import (
    Digraph,
    GammaTriple,
    Graph,
    Orientation,
    VertexLabeling,
    alternating_path,
    complete_graph,
    counterexample_tree,
    make_graph,
    named,
    orient,
    parse_text,
    path_graph,
    petersen_graph,
    reverse,
    tight_bound_graph,
    to_text,
)
from .quasigroup import (
    CayleyTable,
    CordialInstance,
    cayley_to_text,
    is_a_cordial,
    is_subset_q_cordial,
    parse_cayley_text,
    validate_latin,
    z3_minus_instance,
)
from .search import (
    SearchReport,
    SymmetryMode,
    TournamentSurvey,
    friendly_labelings,
    noncordial_orientations,
    orientations,
    path_cordial_dp,
    scan_alternating_paths,
    tournament_survey,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCheckReport",
    "BoundsRecord",
    "CayleyTable",
    "CordialInstance",
    "Digraph",
    "GammaTriple",
    "Graph",
    "LabelingReport",
    "Orientation",
    "OrientabilityWitness",
    "SearchReport",
    "SymmetryMode",
    "TournamentSurvey",
    "VertexLabeling",
    "alternating_path",
    "arc_label",
    "bichromatic_capacity",
    "bounds_record",
    "cayley_to_text",
    "complete_graph",
    "complete_graph_zero_excess",
    "construct_witness_orientation",
    "counterexample_tree",
    "friendly_labelings",
    "gamma_triple",
    "is_a_cordial",
    "is_balanced_triple",
    "is_cordial",
    "is_friendly",
    "is_orientable",
    "is_subset_q_cordial",
    "lambda_count",
    "make_graph",
    "max_edges",
    "named",
    "noncordial_orientations",
    "orient",
    "orientations",
    "parse_cayley_text",
    "parse_text",
    "path_cordial_dp",
    "path_graph",
    "petersen_graph",
    "reverse",
    "scan_alternating_paths",
    "tight_bound_graph",
    "to_text",
    "tournament_survey",
    "validate_latin",
    "verify_bound",
    "z3_minus_instance",
    "z_value",
]
