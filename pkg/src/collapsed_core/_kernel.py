"""numba-compiled branching search shared by the k = 1 and k = 2 solvers.

Mirrors the recursive reference in :mod:`collapsed_core.k1` and
:mod:`collapsed_core.k2` step for step (same branch order, tie-breaks and
greedy picks), so decisions, witnesses and node counts are identical. The
recursion is unrolled onto an explicit frame stack; core deletions go to an
undo log.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FOUND, NO, ABORTED = 0, 1, 2


# Eligible vertices (in the core, not in Q) are kept in per-degree bitsets of
# 32-bit words so the branching vertex is found in O(max degree + n/32).

@njit(cache=True)
def _bset(bits, cnt, d, v):
    bits[d, v >> 5] |= 1 << (v & 31)
    cnt[d] += 1


@njit(cache=True)
def _bclr(bits, cnt, d, v):
    bits[d, v >> 5] &= ~(1 << (v & 31))
    cnt[d] -= 1


@njit(cache=True)
def _low_bit(word):
    i = 0
    if word & 0xFFFF == 0:
        word >>= 16
        i += 16
    if word & 0xFF == 0:
        word >>= 8
        i += 8
    if word & 0xF == 0:
        word >>= 4
        i += 4
    if word & 0x3 == 0:
        word >>= 2
        i += 2
    if word & 0x1 == 0:
        i += 1
    return i


@njit(cache=True)
def _high_bit(word):
    i = 31
    while not (word >> i) & 1:
        i -= 1
    return i


@njit(cache=True)
def _pick(bits, cnt, top_deg, tie_high):
    """Lowest (or highest) id among eligible vertices of maximum degree."""
    for d in range(top_deg, -1, -1):
        if cnt[d] > 0:
            words = bits.shape[1]
            if tie_high:
                for w in range(words - 1, -1, -1):
                    if bits[d, w] != 0:
                        return (w << 5) + _high_bit(bits[d, w]), d
            else:
                for w in range(words):
                    if bits[d, w] != 0:
                        return (w << 5) + _low_bit(bits[d, w]), d
    return -1, -1


@njit(cache=True)
def _delete(v, indptr, indices, alive, deg, in_q, bits, cnt, k, log, log_top):
    # same discipline as PeelState.delete: dead when processed, queued on k-1
    if not alive[v]:
        return log_top
    start = log_top
    log[log_top] = v
    log_top += 1
    i = start
    while i < log_top:
        u = log[i]
        i += 1
        alive[u] = False
        if not in_q[u]:
            _bclr(bits, cnt, deg[u], u)
        for p in range(indptr[u], indptr[u + 1]):
            w = indices[p]
            if alive[w]:
                if not in_q[w]:
                    _bclr(bits, cnt, deg[w], w)
                    _bset(bits, cnt, deg[w] - 1, w)
                deg[w] -= 1
                if deg[w] == k - 1:
                    log[log_top] = w
                    log_top += 1
    return log_top


@njit(cache=True)
def _undo(start, end, indptr, indices, alive, deg, in_q, bits, cnt, log):
    for i in range(end - 1, start - 1, -1):
        u = log[i]
        for p in range(indptr[u], indptr[u + 1]):
            w = indices[p]
            if alive[w]:
                if not in_q[w]:
                    _bclr(bits, cnt, deg[w], w)
                    _bset(bits, cnt, deg[w] + 1, w)
                deg[w] += 1
        alive[u] = True
        if not in_q[u]:
            _bset(bits, cnt, deg[u], u)


@njit(cache=True)
def _greedy(n, indptr, indices, alive, in_q, budget_left, seen, stamp, queue, sizes, mins, has_q, order, picks):
    """Fill ``picks`` with one vertex from each of the largest Q-free cycle
    components; return (number of picks, vertices removable).

    ``seen[v] == stamp`` marks vertices visited in this call."""
    ncomp = 0
    for s in range(n):
        if not alive[s] or seen[s] == stamp:
            continue
        seen[s] = stamp
        head, tail = 0, 1
        queue[0] = s
        size = 0
        touches_q = False
        while head < tail:
            u = queue[head]
            head += 1
            size += 1
            if in_q[u]:
                touches_q = True
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if alive[w] and seen[w] != stamp:
                    seen[w] = stamp
                    queue[tail] = w
                    tail += 1
        sizes[ncomp] = size
        mins[ncomp] = s
        has_q[ncomp] = touches_q
        ncomp += 1

    r = 0
    for c in range(ncomp):
        if not has_q[c]:
            # stable insertion by size descending; ties keep ascending min id
            j = r
            while j > 0 and sizes[order[j - 1]] < sizes[c]:
                order[j] = order[j - 1]
                j -= 1
            order[j] = c
            r += 1
    r_prime = min(r, max(budget_left, 0))
    removable = 0
    for i in range(r_prime):
        removable += sizes[order[i]]
        picks[i] = mins[order[i]]
    return r_prime, removable


@njit(cache=True)
def _counters(nodes, prune_s, prune_q, prune_stuck):
    out = np.empty(4, dtype=np.int64)
    out[0] = nodes
    out[1] = prune_s
    out[2] = prune_q
    out[3] = prune_stuck
    return out


@njit(cache=True)
def branch_search(indptr, indices, alive, deg, size, k, b, x, q_limit, cycle_greedy, tie_high, node_budget):
    """Run the S/Q search from the given core state.

    Returns (status, witness, counters) where counters is
    [nodes_visited, prune_S, prune_Q, prune_stuck].
    """
    n = alive.shape[0]
    nodes = 0
    prune_s = 0
    prune_q = 0
    prune_stuck = 0
    witness = np.empty(0, dtype=np.int64)

    max_depth = b + 2 + q_limit + 2
    fr_v = np.empty(max_depth, dtype=np.int64)
    fr_phase = np.empty(max_depth, dtype=np.int64)
    fr_lo = np.empty(max_depth, dtype=np.int64)
    fr_hi = np.empty(max_depth, dtype=np.int64)
    fr_real = np.empty(max_depth, dtype=np.bool_)
    log = np.empty(n * (b + 2) + 1, dtype=np.int64)
    log_top = 0
    S = np.empty(b + 2, dtype=np.int64)
    s_size = 0
    in_q = np.zeros(n, dtype=np.bool_)
    q_size = 0

    seen = np.zeros(n, dtype=np.int64)
    stamp = 0
    queue = np.empty(n, dtype=np.int64)
    sizes = np.empty(n, dtype=np.int64)
    mins = np.empty(n, dtype=np.int64)
    has_q = np.empty(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    picks = np.empty(n, dtype=np.int64)

    top_deg = 0
    for v in range(n):
        if alive[v] and deg[v] > top_deg:
            top_deg = deg[v]
    bits = np.zeros((top_deg + 1, (n >> 5) + 1), dtype=np.int64)
    cnt = np.zeros(top_deg + 1, dtype=np.int64)
    for v in range(n):
        if alive[v]:
            _bset(bits, cnt, deg[v], v)

    top = 0
    entering = True
    while True:
        if entering:
            nodes += 1
            if node_budget > 0 and nodes > node_budget:
                return ABORTED, witness, _counters(nodes, prune_s, prune_q, prune_stuck)
            branch_v = -1
            if s_size > b:
                prune_s += 1
            elif q_size > q_limit:
                prune_q += 1
            elif size <= x:
                witness = S[:s_size].copy()
                return FOUND, witness, _counters(nodes, prune_s, prune_q, prune_stuck)
            else:
                branch_v, best_deg = _pick(bits, cnt, top_deg, tie_high)
                if cycle_greedy and best_deg <= 2:
                    r_prime, removable = 0, 0
                    # with no budget left nothing is removable and size > x here
                    if s_size < b:
                        stamp += 1
                        r_prime, removable = _greedy(
                            n, indptr, indices, alive, in_q, b - s_size,
                            seen, stamp, queue, sizes, mins, has_q, order, picks,
                        )
                    if size - removable <= x:
                        witness = np.empty(s_size + r_prime, dtype=np.int64)
                        witness[:s_size] = S[:s_size]
                        witness[s_size:] = picks[:r_prime]
                        return FOUND, witness, _counters(nodes, prune_s, prune_q, prune_stuck)
                    prune_stuck += 1
                    branch_v = -1
                elif branch_v < 0:
                    prune_stuck += 1
            if branch_v >= 0:
                fr_v[top] = branch_v
                fr_phase[top] = 1
                top += 1
                if s_size < b:
                    # descend into the delete branch
                    fr_lo[top - 1] = log_top
                    log_top = _delete(branch_v, indptr, indices, alive, deg, in_q, bits, cnt, k, log, log_top)
                    fr_hi[top - 1] = log_top
                    fr_real[top - 1] = True
                    size -= log_top - fr_lo[top - 1]
                    S[s_size] = branch_v
                    s_size += 1
                    continue
                # the delete child would be rejected on |S| > b at once:
                # count it without touching the core
                fr_real[top - 1] = False
                nodes += 1
                if node_budget > 0 and nodes > node_budget:
                    return ABORTED, witness, _counters(nodes, prune_s, prune_q, prune_stuck)
                prune_s += 1
            entering = False
            continue

        # a child returned No
        if top == 0:
            return NO, witness, _counters(nodes, prune_s, prune_q, prune_stuck)
        f = top - 1
        v = fr_v[f]
        if fr_phase[f] == 1:
            if fr_real[f]:
                _undo(fr_lo[f], fr_hi[f], indptr, indices, alive, deg, in_q, bits, cnt, log)
                size += fr_hi[f] - fr_lo[f]
                log_top = fr_lo[f]
                s_size -= 1
            fr_phase[f] = 2
            if q_size < q_limit:
                in_q[v] = True
                if alive[v]:
                    _bclr(bits, cnt, deg[v], v)
                q_size += 1
                fr_real[f] = True
                entering = True
            else:
                # forbid child rejected on |Q| > limit at once
                fr_real[f] = False
                nodes += 1
                if node_budget > 0 and nodes > node_budget:
                    return ABORTED, witness, _counters(nodes, prune_s, prune_q, prune_stuck)
                prune_q += 1
        else:
            if fr_real[f]:
                in_q[v] = False
                if alive[v]:
                    _bset(bits, cnt, deg[v], v)
                q_size -= 1
            top -= 1


def csr(G):
    indptr = np.zeros(G.n + 1, dtype=np.int64)
    for v in range(G.n):
        indptr[v + 1] = indptr[v] + len(G.adjacency[v])
    indices = np.fromiter(
        (w for adj in G.adjacency for w in adj), dtype=np.int64, count=int(indptr[-1])
    )
    return indptr, indices


def run_search(G, k: int, b: int, x: int, q_limit: int, cycle_greedy: bool, options, stats):
    """Drive :func:`branch_search` from a fresh k-core of ``G``.

    Returns the witness list, None for No, or raises NodeBudgetExceeded.
    """
    from .graph import k_core
    from .outcome import NodeBudgetExceeded

    core = k_core(G, k).core
    alive = np.zeros(G.n, dtype=np.bool_)
    for v in core:
        alive[v] = True
    indptr, indices = csr(G)
    deg = np.zeros(G.n, dtype=np.int64)
    for v in core:
        deg[v] = sum(1 for w in G.adjacency[v] if alive[w])
    status, witness, counters = branch_search(
        indptr, indices, alive, deg, len(core), k, b, x, q_limit,
        cycle_greedy, options.tiebreak == "high", options.node_budget,
    )
    stats.nodes_visited = int(counters[0])
    stats.prune_S = int(counters[1])
    stats.prune_Q = int(counters[2])
    stats.prune_stuck = int(counters[3])
    if status == ABORTED:
        raise NodeBudgetExceeded
    if status == NO:
        return None
    return [int(v) for v in witness]


