"""Exact branching solver for Collapsed k-Core with k = 2.

Same S/Q search as the k = 1 solver with two changes. The Q threshold becomes
3b + x. And once no core vertex outside Q has degree above 2, every Q-free
component of the 2-core is a cycle: the node then decides greedily by
spending the remaining budget on the largest such cycles, one vertex each.
With x = 0 this is an exact Feedback Vertex Set solver.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._peelstate import PeelState
from .graph import Graph, components, is_cycle_component
from .k1 import pick_branch_vertex
from .outcome import (
    Decision,
    NodeBudgetExceeded,
    Outcome,
    SolverOptions,
    SolverStats,
    use_kernel,
    verified_yes,
)

K = 2


@dataclass(frozen=True)
class CycleGreedyPlan:
    components: tuple[frozenset[int], ...]
    r_prime: int
    removable_total: int

    def picks(self) -> list[int]:
        # one vertex per destroyed cycle; smallest id for determinism
        return [min(c) for c in self.components[: self.r_prime]]


def plan_cycle_greedy(G: Graph, core, forbidden, budget_left: int) -> CycleGreedyPlan:
    """Q-free components of the 2-core ``core``, largest first, and how much
    of the core ``budget_left`` single deletions can destroy."""
    forbidden = set(forbidden)
    comps = tuple(c for c in components(G, core) if not (c & forbidden))
    assert all(is_cycle_component(G, c) for c in comps), "greedy step on a non-cycle"
    r_prime = min(len(comps), max(budget_left, 0))
    removable = sum(len(c) for c in comps[:r_prime])
    return CycleGreedyPlan(comps, r_prime, removable)


def solve_k2(
    G: Graph,
    b: int,
    x: int,
    options: SolverOptions | None = None,
    *,
    greedy_log: list | None = None,
) -> Outcome:
    """Decide Collapsed 2-Core.

    ``greedy_log``, if given, receives ``(S, Q, accepted)`` for every node
    resolved by the cycle-greedy step.
    """
    if b < 0 or x < 0:
        raise ValueError("b and x must be non-negative")
    options = options or SolverOptions()
    b, x = min(b, G.n), min(x, G.n)
    q_limit = G.n if options.disable_q_bound else 3 * b + x
    budget = options.node_budget
    stats = SolverStats()
    state = PeelState(G, K)
    in_q = [False] * G.n
    S: list[int] = []
    Q: list[int] = []

    def greedy() -> list[int] | None:
        plan = plan_cycle_greedy(G, state.core(), Q, b - len(S))
        accepted = state.size - plan.removable_total <= x
        if greedy_log is not None:
            greedy_log.append((frozenset(S), frozenset(Q), accepted))
        if not accepted:
            stats.prune_stuck += 1
            return None
        return S + plan.picks()

    def rec() -> list[int] | None:
        stats.nodes_visited += 1
        if budget and stats.nodes_visited > budget:
            raise NodeBudgetExceeded
        if len(S) > b:
            stats.prune_S += 1
            return None
        if len(Q) > q_limit:
            stats.prune_Q += 1
            return None
        if state.size <= x:
            return list(S)
        v, d = pick_branch_vertex(state, in_q, options.tiebreak)
        if d <= 2:
            return greedy()

        removed = state.delete(v)
        S.append(v)
        found = rec()
        S.pop()
        state.undo(removed)
        if found is not None:
            return found

        in_q[v] = True
        Q.append(v)
        found = rec()
        in_q[v] = False
        Q.pop()
        return found

    start = time.perf_counter()
    try:
        if use_kernel(options):
            from ._kernel import run_search

            witness = run_search(G, K, b, x, q_limit, True, options, stats)
        else:
            witness = rec()
    except NodeBudgetExceeded:
        stats.nodes_visited = budget
        stats.wall_time = time.perf_counter() - start
        return Outcome(Decision.ABORTED, stats=stats)
    stats.wall_time = time.perf_counter() - start
    if witness is None:
        return Outcome(Decision.NO, stats=stats)
    return verified_yes(G, K, b, x, witness, stats)


def solve_fvs(G: Graph, b: int, options: SolverOptions | None = None) -> Outcome:
    """Feedback vertex set of size at most ``b``: Collapsed 2-Core with x = 0."""
    return solve_k2(G, b, 0, options)
