"""Graph-level toolkit for graph states.

Local complementations, Pauli-measurement graph actions, foliage analysis,
LC-equivalence and vertex-minor search, plus desk-scale verification of the
no-crossing properties of ring and line networks.
"""

from .foliage import FoliageDecomposition, foliage_decomposition
from .formats import (
    GraphDocument,
    ParseError,
    export_dot,
    parse_graph,
    serialize_graph,
    sniff_format,
)
from .graph import MAX_LABEL, Graph, PauliBasis, construct_named
from .search import (
    DEFAULT_BUDGET,
    DEFAULT_ORBIT_CAP,
    BellPairTarget,
    BudgetExceeded,
    MeasurementSequence,
    MeasurementStep,
    OrbitCapExceeded,
    SearchLimitExceeded,
    SearchStats,
    VertexMinorReport,
    Witness,
    apply_leaf_axil_reduction,
    can_extract_bell_pairs,
    is_lc_equivalent,
    is_vertex_minor,
    lc_orbit,
)
from .verify import (
    ButterflyDemo,
    DemoStep,
    DemoTranscript,
    FoliageInvarianceReport,
    TheoremReport,
    crossing_quadruples_line,
    crossing_quadruples_ring,
    demo_ring_butterfly,
    enumerate_graphs,
    line_disjoint_schedule,
    random_graph,
    verify_foliage_invariance,
    verify_line_no_crossing,
    verify_noncrossing_controls,
    verify_ring_no_crossing,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_LABEL",
    "Graph",
    "PauliBasis",
    "construct_named",
    "FoliageDecomposition",
    "foliage_decomposition",
    "MeasurementStep",
    "MeasurementSequence",
    "BellPairTarget",
    "Witness",
    "SearchStats",
    "VertexMinorReport",
    "SearchLimitExceeded",
    "OrbitCapExceeded",
    "BudgetExceeded",
    "DEFAULT_ORBIT_CAP",
    "DEFAULT_BUDGET",
    "lc_orbit",
    "is_lc_equivalent",
    "is_vertex_minor",
    "apply_leaf_axil_reduction",
    "can_extract_bell_pairs",
    "TheoremReport",
    "FoliageInvarianceReport",
    "DemoStep",
    "DemoTranscript",
    "ButterflyDemo",
    "crossing_quadruples_ring",
    "crossing_quadruples_line",
    "verify_ring_no_crossing",
    "verify_line_no_crossing",
    "verify_noncrossing_controls",
    "verify_foliage_invariance",
    "line_disjoint_schedule",
    "demo_ring_butterfly",
    "enumerate_graphs",
    "random_graph",
    "GraphDocument",
    "ParseError",
    "parse_graph",
    "serialize_graph",
    "sniff_format",
    "export_dot",
]
