"""Wavelength assignment for multicast light trees on tree fiber networks.

Core pieces: the instance data model, conflict graphs, maximum bipartite
matching, the round-based greedy colorer with its matching-driven color
reuse, exact chromatic/clique oracles, load normalization, lower bounds,
and a generation/verification/bench harness with a CLI.
"""

from ._kernels import BACKEND as kernel_backend
from .bounds import (
    BoundsReport,
    NormalizedInstance,
    compute_bounds,
    edge_lower_bound,
    exact_chromatic,
    first_fit_baseline,
    global_lower_bound,
    max_clique,
    normalize,
)
from .conflict import (
    BipartiteGraph,
    ConflictGraph,
    build_conflict_graph,
    edge_complement_bipartite,
)
from .greedy import (
    EdgeOrder,
    EdgeType,
    GreedyResult,
    RoundState,
    SchemeChoice,
    bfs_edge_order,
    classify_edge,
    first_fit_color,
    greedy_color,
    process_edge_1,
    process_edge_2,
    process_edge_simple,
)
from .harness import (
    BenchItem,
    BenchOutcome,
    BenchRecord,
    GenParams,
    SweepSpec,
    VerifyReport,
    bench_run,
    generate_instance,
    round_bound_violations,
    sweep_items,
    verify_coloring,
)
from .instances import (
    Arc,
    Coloring,
    HostTree,
    InputError,
    Instance,
    InternalError,
    LimitError,
    RootedSubtree,
    collide,
    load,
    subtrees_on_arc,
    subtrees_on_edge,
    validate_subtree,
    validate_tree,
)
from .matching import Matching, brute_force_matching_size, max_bipartite_matching

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BenchItem",
    "BenchOutcome",
    "BenchRecord",
    "BipartiteGraph",
    "BoundsReport",
    "Coloring",
    "ConflictGraph",
    "EdgeOrder",
    "EdgeType",
    "GenParams",
    "GreedyResult",
    "HostTree",
    "InputError",
    "Instance",
    "InternalError",
    "LimitError",
    "Matching",
    "NormalizedInstance",
    "RootedSubtree",
    "RoundState",
    "SchemeChoice",
    "SweepSpec",
    "VerifyReport",
    "bench_run",
    "bfs_edge_order",
    "brute_force_matching_size",
    "build_conflict_graph",
    "classify_edge",
    "collide",
    "compute_bounds",
    "edge_complement_bipartite",
    "edge_lower_bound",
    "exact_chromatic",
    "first_fit_baseline",
    "first_fit_color",
    "generate_instance",
    "global_lower_bound",
    "greedy_color",
    "kernel_backend",
    "load",
    "max_bipartite_matching",
    "max_clique",
    "normalize",
    "process_edge_1",
    "process_edge_2",
    "process_edge_simple",
    "round_bound_violations",
    "subtrees_on_arc",
    "subtrees_on_edge",
    "sweep_items",
    "validate_subtree",
    "validate_tree",
    "verify_coloring",
]
