"""Exact analysis of longest-path intersections in small graphs.

The package computes, for a connected graph and a set of three longest
paths, the minimum over vertices of the summed distances to the three
paths, together with the supporting quantities (exclusive vertices,
crossing counts, pairwise intersections). It checks every claim of the
surrounding theory on exhaustive small-graph corpora and on user-supplied
graphs, and it builds and brute-force-verifies the pendant-plus-subdivision
construction that scales the parameter linearly.
"""

from .claims import (
    CONJECTURE_CLAIMS,
    HOLDS,
    PROVEN_CLAIMS,
    SKIPPED_BUDGET,
    SKIPPED_TRUNCATED,
    VACUOUS,
    VIOLATED,
    ClaimVerdict,
    TruncatedEnumerationError,
    check_case_bounds,
    check_conjecture4,
    check_conjecture_z,
    check_lemma21,
    check_lemma22,
    check_lemma23,
    check_prop1,
    check_theorem1,
    gallai_vertex_set,
    is_hypotraceable,
)
from .generate import generate_connected_graphs
from .graphs import (
    DistanceVector,
    Graph,
    Graph6Error,
    distances_from_set,
    format_edge_list,
    from_edge_list,
    graph_key,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .paths import (
    BudgetError,
    DEFAULT_PATH_CAP,
    LongestPathSet,
    Path,
    enumerate_all_simple_paths,
    enumerate_longest_paths,
    has_hamiltonian_path,
    longest_path_length,
    subpath,
)
from .scan import (
    ALL_CHECKS,
    ScanConfig,
    ScanReport,
    analyze_one,
    emit_report,
    scan,
    subdivision_sweep,
)
from .subdivision import (
    PendantExtension,
    SubdividedInstance,
    VertexOrigin,
    attach_pendants,
    build_instance,
    check_size_bound,
    restrict_to_triple,
    subdivide,
    verify_proposition,
)
from .triples import (
    PathTriple,
    TripleAnalysis,
    analyze_triple,
    distance_sum,
    exclusive_vertices,
    f_value,
    pairwise_intersection,
    t_count,
)

__version__ = "0.1.0"
