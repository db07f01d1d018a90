"""lichor: constructive list edge coloring of line perfect multigraphs.

A multigraph is line perfect when every biconnected block is bipartite,
lives on four vertices, or is a triangle fan (two adjacent apexes plus
independent centers).  For such graphs any per-edge color lists of size
chi' admit a proper edge coloring; this package constructs one, block
by block, and ships the brute-force oracles and seeded generators used
to verify every step at small scale.
"""

from .bipartite import (KernelRounds, LineOrientation, find_kernel, konig_color,
                        kernel_list_color, normalize_at, orient, solve_bipartite)
from .blocks import (BlockClass, BlockDecomposition, BlockKind, BlockTask,
                     bipartition, block_chromatic_index, block_order,
                     chromatic_index, classify_block, decompose_blocks)
from .clique import (DemandFunction, Splitting, SolveStats, TriangleProfile,
                     WeakBounds, classify_splitting, clique_edge_bound,
                     demand_fan_apex, demand_fan_center, demand_four_vertex,
                     monitor, solve_k4, solve_k11n_apex, solve_k11n_center,
                     triangle_profile, weak_phase)
from .errors import (ContractError, InputError, InvariantError, LichorError,
                     ListTooSmallError, NotLinePerfectError, OracleSizeError,
                     ParseError)
from .formats import emit_instance, emit_report, parse_instance, parse_report
from .generate import (GenParams, gen_line_perfect, gen_lists,
                       gen_small_multigraph, gen_transversal_instance,
                       identical_lists)
from .multigraph import (Multigraph, degree, edges_between, line_adjacent,
                         triangle_edges, vertices_of)
from .oracle import (VerifyResult, brute_force_chi, brute_force_list_color,
                     find_odd_cycle, verify_coloring, verify_kernel)
from .solver import (BlockTraceEntry, Instance, SolveReport, forbidden_at_cut,
                     solve, traversal_order)
from .transversal import (ColorLists, HallViolator, ReducingSet,
                          find_reducing_sets, first_reducing_set, solve_sdr)

__version__ = "0.1.0"

__all__ = [
    "BlockClass", "BlockDecomposition", "BlockKind", "BlockTask",
    "BlockTraceEntry", "ColorLists", "ContractError", "DemandFunction",
    "GenParams", "HallViolator", "InputError", "Instance", "InvariantError",
    "KernelRounds", "LichorError", "LineOrientation", "ListTooSmallError",
    "Multigraph", "NotLinePerfectError", "OracleSizeError", "ParseError",
    "ReducingSet", "SolveReport", "SolveStats", "Splitting", "TriangleProfile",
    "VerifyResult", "WeakBounds", "bipartition", "block_chromatic_index",
    "block_order", "brute_force_chi", "brute_force_list_color",
    "chromatic_index", "classify_block", "classify_splitting",
    "clique_edge_bound", "decompose_blocks", "degree", "demand_fan_apex",
    "demand_fan_center", "demand_four_vertex", "edges_between",
    "emit_instance", "emit_report", "find_kernel", "find_odd_cycle",
    "find_reducing_sets", "first_reducing_set", "forbidden_at_cut",
    "gen_line_perfect", "gen_lists", "gen_small_multigraph",
    "gen_transversal_instance", "identical_lists", "kernel_list_color",
    "konig_color", "line_adjacent", "monitor", "normalize_at", "orient",
    "parse_instance", "parse_report", "solve", "solve_bipartite", "solve_k4",
    "solve_k11n_apex", "solve_k11n_center", "solve_sdr", "triangle_edges",
    "traversal_order", "triangle_profile", "verify_coloring", "verify_kernel",
    "vertices_of",
    "weak_phase",
]
