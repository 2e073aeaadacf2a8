"""Exact solvers for Collapsed k-Core: delete at most b vertices so that the
k-core of what remains has at most x vertices."""

from .errors import (
    CollapseError,
    DuplicateEdgeError,
    IncompatibleAlgorithmError,
    ParseError,
    PreconditionError,
    SelfLoopError,
    TooLargeError,
    VertexOutOfRangeError,
    WitnessError,
)
from .generators import (
    Instance,
    add_universal,
    boosted_or_gadget,
    clique_to_collapse,
    or_gadget,
    pad_core_target,
    random_instance,
)
from .graph import (
    Graph,
    PeelResult,
    build_graph,
    components,
    degeneracy,
    is_cycle_component,
    k_core,
    stable_core,
)
from .k1 import solve_k1
from .k2 import CycleGreedyPlan, solve_fvs, solve_k2
from .oracle import OracleLimits, min_budget, solve_brute
from .outcome import Decision, Outcome, SolverOptions, SolverStats

__all__ = [
    "CollapseError", "DuplicateEdgeError", "IncompatibleAlgorithmError", "ParseError",
    "PreconditionError", "SelfLoopError", "TooLargeError", "VertexOutOfRangeError",
    "WitnessError", "Instance", "add_universal", "boosted_or_gadget", "clique_to_collapse",
    "or_gadget", "pad_core_target", "random_instance", "Graph", "PeelResult", "build_graph",
    "components", "degeneracy", "is_cycle_component", "k_core", "stable_core", "solve_k1",
    "CycleGreedyPlan", "solve_fvs", "solve_k2", "OracleLimits", "min_budget", "solve_brute",
    "Decision", "Outcome", "SolverOptions", "SolverStats",
]
