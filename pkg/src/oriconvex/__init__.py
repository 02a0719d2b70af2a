"""Geodesic convexity in oriented graphs.

Computes the geodetic number g(D), hull number h(D) and convexity number
con(D) of digraphs, their exact minima and maxima over all orientations of
an undirected graph, constructive orientations realizing the known strict
separations, and exhaustive verification suites over small-graph corpora.
"""

from .graphs import (
    DEFAULT_EDGE_BUDGET,
    Digraph,
    EdgeBudgetError,
    Graph,
    GraphFormatError,
    PartialOrientation,
    encode_graph6,
    end_vertices,
    enumerate_orientations,
    is_complete,
    is_connected,
    min_degree,
    orientation_count,
    orientation_from_index,
    parse_arc_list,
    parse_edge_list,
    parse_graph6,
    reverse,
)
from .geodesic import (
    UNREACHABLE,
    all_pairs_distances,
    convex_hull,
    extreme_vertices,
    interval,
    interval_of_set,
    is_convex,
    is_extreme,
    iterated_interval,
    sinks,
    sources,
)
from .invariants import (
    DigraphReport,
    OrientableNumbers,
    convexity_number,
    digraph_report,
    geodetic_number,
    hull_number,
    orientable_numbers,
)
from .orienters import (
    ConstructionError,
    TripleSelection,
    complete_graph_orientations,
    d1_from_d2,
    d2_construction,
    extreme_free_orientation,
    extreme_free_orientation_steps,
    find_edge_disjoint_induced_cycles,
    induced_cycles,
    triple_selection,
)
from .verifier import (
    CorpusReport,
    HgClassification,
    classify_hg,
    classify_values,
    corpus_run,
    verify_convexity,
    verify_separation,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EDGE_BUDGET",
    "Digraph",
    "EdgeBudgetError",
    "Graph",
    "GraphFormatError",
    "PartialOrientation",
    "encode_graph6",
    "end_vertices",
    "enumerate_orientations",
    "is_complete",
    "is_connected",
    "min_degree",
    "orientation_count",
    "orientation_from_index",
    "parse_arc_list",
    "parse_edge_list",
    "parse_graph6",
    "reverse",
    "UNREACHABLE",
    "all_pairs_distances",
    "convex_hull",
    "extreme_vertices",
    "interval",
    "interval_of_set",
    "is_convex",
    "is_extreme",
    "iterated_interval",
    "sinks",
    "sources",
    "DigraphReport",
    "OrientableNumbers",
    "convexity_number",
    "digraph_report",
    "geodetic_number",
    "hull_number",
    "orientable_numbers",
    "ConstructionError",
    "TripleSelection",
    "complete_graph_orientations",
    "d1_from_d2",
    "d2_construction",
    "extreme_free_orientation",
    "extreme_free_orientation_steps",
    "find_edge_disjoint_induced_cycles",
    "induced_cycles",
    "triple_selection",
    "CorpusReport",
    "HgClassification",
    "classify_hg",
    "classify_values",
    "corpus_run",
    "verify_convexity",
    "verify_separation",
]
