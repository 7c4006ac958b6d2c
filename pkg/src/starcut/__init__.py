"""Structure connectivity of graphs with respect to 3-vertex stars.

A structure cut here is a family of vertex-disjoint stars K_{1,m} whose
removal disconnects the graph or leaves a single vertex; the structure
connectivity is the least size of such a family.  The package computes it
exactly for small graphs, decides existence by constructive rules, covers
minimum vertex cuts by disjoint stars, refines coverings into cuts, and
checks every guarantee exhaustively over all connected graphs up to 8 vertices.
"""
from .errors import InvariantViolation
from .graph import (
    Graph,
    Path,
    global_min_cut,
    induced_subgraph,
    internally_disjoint_paths,
    local_connectivity,
    min_vertex_cut,
    vertex_connectivity,
)
from .formats import from_graph6, read_edge_list, read_graph6_lines, to_graph6
from .families import (
    book_b5,
    build,
    complete,
    complete_bipartite,
    cycle,
    path_graph,
    petersen,
)
from .stars import (
    FOUND,
    NO_CUT,
    Star,
    StarFamily,
    StructResult,
    enumerate_stars,
    is_structure_cut,
    maximal_star_packing,
    struct_connectivity_exact,
)
from .matching import maximum_matching
from .existence import (
    EXISTS,
    NOT_EXISTS,
    Certificate,
    decide_existence,
    diameter_cut,
    exists_mod2,
    greedy_cut_mod1,
    mod0_condition,
)
from .covering import (
    CoverState,
    CutPartition,
    cover_matched_pairs,
    cover_min_cut,
    cover_min_cut_detailed,
    cover_singletons,
    partition_cut,
    split_sides,
)
from .verify import (
    CHECK_NAMES,
    RefinementResult,
    VerificationRecord,
    check_bounds,
    check_open_problem,
    find_ratio_witnesses,
    refine_detailed,
    refine_to_structure_cut,
    verify_graph,
)
from .corpus import (
    CONNECTED_COUNTS,
    CorpusSource,
    canonical_form,
    enumerate_connected,
    run_verification,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_NAMES",
    "CONNECTED_COUNTS",
    "Certificate",
    "CorpusSource",
    "CoverState",
    "CutPartition",
    "EXISTS",
    "FOUND",
    "Graph",
    "InvariantViolation",
    "NOT_EXISTS",
    "NO_CUT",
    "Path",
    "RefinementResult",
    "Star",
    "StarFamily",
    "StructResult",
    "VerificationRecord",
    "book_b5",
    "build",
    "canonical_form",
    "check_bounds",
    "check_open_problem",
    "complete",
    "complete_bipartite",
    "cover_matched_pairs",
    "cover_min_cut",
    "cover_min_cut_detailed",
    "cover_singletons",
    "cycle",
    "decide_existence",
    "diameter_cut",
    "enumerate_connected",
    "enumerate_stars",
    "exists_mod2",
    "find_ratio_witnesses",
    "from_graph6",
    "global_min_cut",
    "greedy_cut_mod1",
    "induced_subgraph",
    "internally_disjoint_paths",
    "is_structure_cut",
    "local_connectivity",
    "maximal_star_packing",
    "maximum_matching",
    "min_vertex_cut",
    "mod0_condition",
    "partition_cut",
    "path_graph",
    "petersen",
    "read_edge_list",
    "read_graph6_lines",
    "refine_detailed",
    "refine_to_structure_cut",
    "run_verification",
    "split_sides",
    "struct_connectivity_exact",
    "summarize",
    "to_graph6",
    "verify_graph",
    "vertex_connectivity",
]
