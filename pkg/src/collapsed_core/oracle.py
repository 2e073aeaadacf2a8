"""Brute-force reference solver for any k.

Deletion sets are tried by size, then lexicographically, so the first hit is
a minimum-cardinality witness and is reproducible. Two shortcuts keep the
enumeration fast without changing which set is found first:

* a vertex already peeled away by the smaller-id choices is never chosen
  (a set containing such a vertex has a strictly smaller subset that also
  works, which an earlier size would have found);
* if the (k+b)-core minus b vertices is still larger than x, no set of size
  at most b can work, so the answer is No before enumerating anything.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._peelstate import PeelState
from .errors import TooLargeError
from .graph import Graph, stable_core
from .outcome import Decision, Outcome, SolverStats, verified_yes


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 20
    max_b: int = 6


DEFAULT_LIMITS = OracleLimits()


def _check_limits(G: Graph, b: int, limits: OracleLimits) -> None:
    if G.n > limits.max_n or b > limits.max_b:
        raise TooLargeError(
            f"brute force limited to n <= {limits.max_n}, b <= {limits.max_b} "
            f"(got n={G.n}, b={b})"
        )


def _first_of_size(state: PeelState, size: int, x: int, stats: SolverStats) -> list[int] | None:
    """Lexicographically first deletion set of exactly ``size`` vertices."""
    n = state.G.n
    chosen: list[int] = []

    def rec(start: int) -> bool:
        if len(chosen) == size:
            stats.nodes_visited += 1
            return state.size <= x
        need = size - len(chosen)
        alive = state.alive
        for v in range(start, n - need + 1):
            if not alive[v]:
                continue
            removed = state.delete(v)
            chosen.append(v)
            if rec(v + 1):
                state.undo(removed)
                return True
            chosen.pop()
            state.undo(removed)
        return False

    return list(chosen) if rec(0) else None


def solve_brute(
    G: Graph,
    b: int,
    x: int,
    k: int,
    limits: OracleLimits = DEFAULT_LIMITS,
) -> Outcome:
    if k < 0 or b < 0 or x < 0:
        raise ValueError("b, x and k must be non-negative")
    b, x = min(b, G.n), min(x, G.n)
    _check_limits(G, b, limits)
    stats = SolverStats()
    start = time.perf_counter()
    if len(stable_core(G, k, b)) - b > x:
        stats.prune_stuck += 1
        stats.nodes_visited = 1
        stats.wall_time = time.perf_counter() - start
        return Outcome(Decision.NO, stats=stats)

    state = PeelState(G, k)
    witness = None
    for size in range(b + 1):
        witness = _first_of_size(state, size, x, stats)
        if witness is not None:
            break
    stats.wall_time = time.perf_counter() - start
    if witness is None:
        return Outcome(Decision.NO, stats=stats)
    return verified_yes(G, k, b, x, witness, stats)


def min_budget(G: Graph, x: int, k: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Smallest b for which deleting b vertices leaves a k-core of at most x vertices."""
    if k < 0 or x < 0:
        raise ValueError("x and k must be non-negative")
    if G.n > limits.max_n:
        _check_limits(G, 0, limits)
    state = PeelState(G, k)
    stats = SolverStats()
    for size in range(G.n + 1):
        if size > limits.max_b:
            raise TooLargeError(
                f"minimum budget exceeds the brute-force limit b <= {limits.max_b}"
            )
        if _first_of_size(state, size, x, stats) is not None:
            return size
    raise AssertionError("deleting every vertex always empties the core")
