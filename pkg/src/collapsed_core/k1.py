"""Exact branching solver for Collapsed k-Core with k = 1.

Search over two sets: S (deleted) and Q (vertices the search has decided
never to delete). A node rejects when |S| > b or |Q| > b + x, accepts when the
1-core of G - S has at most x vertices, rejects when every core vertex is in
Q, and otherwise branches on a maximum-degree core vertex outside Q: first
delete it, then forbid it. Runs in O(2^(x+2b) (m+n)).
"""

from __future__ import annotations

import time

from ._peelstate import PeelState
from .graph import Graph
from .outcome import (
    Decision,
    NodeBudgetExceeded,
    Outcome,
    SolverOptions,
    SolverStats,
    use_kernel,
    verified_yes,
)

K = 1


def pick_branch_vertex(state: PeelState, in_q: list[bool], tiebreak: str) -> tuple[int, int]:
    """Maximum-degree core vertex outside Q as ``(vertex, degree)``; ``(-1, -1)`` if none."""
    alive, deg = state.alive, state.deg
    best, best_deg = -1, -1
    if tiebreak == "low":
        for v in range(len(alive)):
            if alive[v] and not in_q[v] and deg[v] > best_deg:
                best, best_deg = v, deg[v]
    else:
        for v in range(len(alive)):
            if alive[v] and not in_q[v] and deg[v] >= best_deg:
                best, best_deg = v, deg[v]
    return best, best_deg


def solve_k1(G: Graph, b: int, x: int, options: SolverOptions | None = None) -> Outcome:
    if b < 0 or x < 0:
        raise ValueError("b and x must be non-negative")
    options = options or SolverOptions()
    b, x = min(b, G.n), min(x, G.n)
    q_limit = G.n if options.disable_q_bound else b + x
    budget = options.node_budget
    stats = SolverStats()
    state = PeelState(G, K)
    in_q = [False] * G.n
    S: list[int] = []
    q_size = 0

    def rec() -> list[int] | None:
        nonlocal q_size
        stats.nodes_visited += 1
        if budget and stats.nodes_visited > budget:
            raise NodeBudgetExceeded
        if len(S) > b:
            stats.prune_S += 1
            return None
        if q_size > q_limit:
            stats.prune_Q += 1
            return None
        if state.size <= x:
            return list(S)
        v, _ = pick_branch_vertex(state, in_q, options.tiebreak)
        if v < 0:
            stats.prune_stuck += 1
            return None

        removed = state.delete(v)
        S.append(v)
        found = rec()
        S.pop()
        state.undo(removed)
        if found is not None:
            return found

        in_q[v] = True
        q_size += 1
        found = rec()
        in_q[v] = False
        q_size -= 1
        return found

    start = time.perf_counter()
    try:
        if use_kernel(options):
            from ._kernel import run_search

            witness = run_search(G, K, b, x, q_limit, False, options, stats)
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
