from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import WitnessError
from .graph import Graph, k_core


class Decision(str, enum.Enum):
    YES = "yes"
    NO = "no"
    ABORTED = "aborted"


@dataclass
class SolverStats:
    nodes_visited: int = 0
    prune_S: int = 0
    prune_Q: int = 0
    prune_stuck: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        return {
            "nodes_visited": self.nodes_visited,
            "prune_S": self.prune_S,
            "prune_Q": self.prune_Q,
            "prune_stuck": self.prune_stuck,
            "wall_time": self.wall_time,
        }


@dataclass(frozen=True)
class SolverOptions:
    """Knobs shared by the branching solvers.

    ``disable_q_bound`` replaces the |Q| pruning threshold with n (test hook);
    ``node_budget`` of 0 means unlimited, otherwise the search aborts once it
    would visit more nodes; ``tiebreak`` picks the lowest ("low") or highest
    ("high") id among maximum-degree branching candidates. ``backend`` selects
    the compiled search ("numba"), the pure-Python recursion ("python"), or
    numba when it is importable ("auto"); all three give identical results.
    """

    disable_q_bound: bool = False
    node_budget: int = 0
    tiebreak: str = "low"
    backend: str = "auto"

    def __post_init__(self):
        if self.backend not in ("auto", "python", "numba"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.tiebreak not in ("low", "high"):
            raise ValueError(f"tiebreak must be 'low' or 'high', got {self.tiebreak!r}")
        if self.node_budget < 0:
            raise ValueError("node_budget must be >= 0")


@dataclass
class Outcome:
    decision: Decision
    witness: frozenset[int] | None = None
    collapsed: frozenset[int] | None = None
    residual_core_size: int | None = None
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def is_yes(self) -> bool:
        return self.decision is Decision.YES


class NodeBudgetExceeded(Exception):
    pass


def verified_yes(G: Graph, k: int, b: int, x: int, witness, stats: SolverStats) -> Outcome:
    """Re-peel ``G - witness`` and build a Yes outcome, or raise WitnessError."""
    witness = frozenset(witness)
    peel = k_core(G, k, witness)
    if len(witness) > b or len(peel.core) > x:
        raise WitnessError(
            f"witness {sorted(witness)} fails: |S|={len(witness)} (b={b}), "
            f"residual core {len(peel.core)} (x={x})"
        )
    return Outcome(
        decision=Decision.YES,
        witness=witness,
        collapsed=peel.collapsed,
        residual_core_size=len(peel.core),
        stats=stats,
    )


def check_witness(G: Graph, k: int, b: int, x: int, witness) -> tuple[bool, int, int]:
    """Return (ok, residual core size, collapsed count) for a candidate deletion set."""
    witness = frozenset(witness)
    peel = k_core(G, k, witness)
    ok = len(witness) <= b and len(peel.core) <= x
    return ok, len(peel.core), len(peel.eliminated)


def use_kernel(options: SolverOptions) -> bool:
    if options.backend == "python":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        if options.backend == "numba":
            raise
        return False
    return True
