"""Resolving sets and metric dimension for direct products of three complete graphs.

The library classifies parameter triples into cones, builds and checks
landmark systems through their edge-colored hypergraphs, detects the
hypergraph shapes that break resolving, constructs minimum resolving sets in
the middle cone, and provides exhaustive / greedy / randomized searches.
"""

from .core import (
    Cone,
    DomainError,
    InputError,
    InternalError,
    Params,
    Vertex,
    all_params,
    are_adjacent,
    classify_cone,
    distance,
    enumerate_vertices,
)
from .landmarks import (
    COLORS,
    COLOR_NAMES,
    NAME_TO_COLOR,
    BasicReport,
    EdgeId,
    Footprint,
    LandmarkGraph,
    LandmarkSet,
    VerifyResult,
    basic_size_bound,
    build_landmark_graph,
    check_basic,
    extend_triple_loop,
    footprint,
    is_resolving_distances,
    is_resolving_footprints,
    landmark_set_from_obj,
    landmark_set_to_obj,
)
from .forbidden import (
    BAD_4_CYCLE,
    KINDS,
    PLAIN_HEX,
    RAINBOW_22_TRIANGLE,
    SHARK_TEETH,
    TRIPLE_LOOP,
    ForbiddenWitness,
    find_all_forbidden,
    find_bad_4_cycles,
    find_plain_hexes,
    find_rainbow_triangles,
    find_shark_teeth,
    find_triple_loops,
    predict_resolving_basic,
    predict_resolving_triple_looped,
    witness_is_valid,
    witness_to_obj,
)
from .construction import (
    ConstructionTrace,
    Multiplicities,
    block_starts,
    compute_multiplicities,
    construct_even,
    construct_middle,
    construct_odd,
    construct_plus_one,
    trace_to_obj,
)
from .domination import (
    DominationReport,
    domination_report,
    domination_report_to_obj,
)
from .dot import landmark_graph_to_dot
from .search import (
    DEFAULT_BUDGET,
    SearchResult,
    exhaustive_min_resolving,
    greedy_resolving,
    random_basic_system,
    search_result_to_obj,
)

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "DomainError",
    "InputError",
    "InternalError",
    "Params",
    "Vertex",
    "all_params",
    "are_adjacent",
    "classify_cone",
    "distance",
    "enumerate_vertices",
    "COLORS",
    "COLOR_NAMES",
    "NAME_TO_COLOR",
    "BasicReport",
    "EdgeId",
    "Footprint",
    "LandmarkGraph",
    "LandmarkSet",
    "VerifyResult",
    "basic_size_bound",
    "build_landmark_graph",
    "check_basic",
    "extend_triple_loop",
    "footprint",
    "is_resolving_distances",
    "is_resolving_footprints",
    "landmark_set_from_obj",
    "landmark_set_to_obj",
    "BAD_4_CYCLE",
    "KINDS",
    "PLAIN_HEX",
    "RAINBOW_22_TRIANGLE",
    "SHARK_TEETH",
    "TRIPLE_LOOP",
    "ForbiddenWitness",
    "find_all_forbidden",
    "find_bad_4_cycles",
    "find_plain_hexes",
    "find_rainbow_triangles",
    "find_shark_teeth",
    "find_triple_loops",
    "predict_resolving_basic",
    "predict_resolving_triple_looped",
    "witness_is_valid",
    "witness_to_obj",
    "ConstructionTrace",
    "Multiplicities",
    "block_starts",
    "compute_multiplicities",
    "construct_even",
    "construct_middle",
    "construct_odd",
    "construct_plus_one",
    "trace_to_obj",
    "DominationReport",
    "domination_report",
    "domination_report_to_obj",
    "landmark_graph_to_dot",
    "DEFAULT_BUDGET",
    "SearchResult",
    "exhaustive_min_resolving",
    "greedy_resolving",
    "random_basic_system",
    "search_result_to_obj",
    "__version__",
]
