"""domchrom: exact domination and dominator/dominated coloring toolkit.

Computes the five invariants (gamma, gamma_t, chi, chi_d, chi_dom) exactly
with optimal witnesses, builds the named D(k) graph families, checks the
structural theorems mechanically (optimal-coloring properties, chains,
planarity with certificates, three-class membership), and scans exhaustive
small-graph streams with checkpointed persistence.
"""

from .graphs import (
    Graph,
    GraphError,
    VertexLabeling,
    complete_bipartite,
    complete_bipartite_parts,
    from_edge_list,
    is_connected,
    to_dot,
)
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .invariants import (
    Coloring,
    DisconnectedError,
    DominatingWitness,
    InvariantReport,
    UndefinedInvariantError,
    chromatic_number,
    classify_dk,
    compute_report,
    dominated_chromatic_number,
    dominates_class,
    dominator_chromatic_number,
    domination_number,
    enumerate_optimal_dominator_colorings,
    is_dominated_coloring,
    is_dominating_set,
    is_dominator_coloring,
    is_proper_coloring,
    is_total_dominating_set,
    total_domination_number,
)
from .constructions import (
    D3Blueprint,
    DEvenSpec,
    DOddSpec,
    build_d3,
    build_d_even,
    build_d_odd,
    enumerate_d3_blueprints,
    validate_blueprint,
)
from .planarity import (
    KuratowskiWitness,
    PlanarityVerdict,
    is_planar,
    kuratowski_witness,
    lr_is_planar,
    planar_embedding,
    verify_embedding,
    verify_kuratowski,
)
from .structure import (
    ChainWitness,
    DeadlineExceeded,
    Theorem1Report,
    check_theorem1,
    find_chain,
    find_total_dominating_transversal,
    is_in_class_d3,
)
from .enumeration import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    extend_connected,
)
from .scan import Checkpoint, ScanRecord, ScanSummary, min_order_scan, scan_stream

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "VertexLabeling",
    "Coloring",
    "DominatingWitness",
    "InvariantReport",
    "DisconnectedError",
    "UndefinedInvariantError",
    "D3Blueprint",
    "DOddSpec",
    "DEvenSpec",
    "PlanarityVerdict",
    "KuratowskiWitness",
    "ChainWitness",
    "Theorem1Report",
    "DeadlineExceeded",
    "Checkpoint",
    "ScanRecord",
    "ScanSummary",
    "from_edge_list",
    "complete_bipartite",
    "complete_bipartite_parts",
    "is_connected",
    "to_dot",
    "parse_graph6",
    "to_graph6",
    "domination_number",
    "total_domination_number",
    "chromatic_number",
    "dominator_chromatic_number",
    "dominated_chromatic_number",
    "dominates_class",
    "classify_dk",
    "compute_report",
    "enumerate_optimal_dominator_colorings",
    "is_dominating_set",
    "is_total_dominating_set",
    "is_proper_coloring",
    "is_dominator_coloring",
    "is_dominated_coloring",
    "build_d_odd",
    "build_d_even",
    "build_d3",
    "validate_blueprint",
    "enumerate_d3_blueprints",
    "is_planar",
    "lr_is_planar",
    "planar_embedding",
    "kuratowski_witness",
    "verify_embedding",
    "verify_kuratowski",
    "check_theorem1",
    "find_chain",
    "find_total_dominating_transversal",
    "is_in_class_d3",
    "enumerate_connected",
    "extend_connected",
    "canonical_form",
    "canonical_graph",
    "are_isomorphic",
    "scan_stream",
    "min_order_scan",
]
