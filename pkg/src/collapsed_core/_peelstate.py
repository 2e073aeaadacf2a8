"""Mutable k-core of ``G - S`` supporting delete/undo, used inside searches.

Deleting a vertex cascades only through the part of the core it touches, so
a branch costs O(size of the cascade) instead of a full re-peel.
"""

from __future__ import annotations

from .graph import Graph, k_core


class PeelState:
    __slots__ = ("G", "k", "alive", "deg", "size")

    def __init__(self, G: Graph, k: int):
        self.G = G
        self.k = k
        core = k_core(G, k).core
        self.alive = [v in core for v in range(G.n)]
        adj = G.adjacency
        alive = self.alive
        self.deg = [
            sum(1 for w in adj[v] if alive[w]) if alive[v] else 0
            for v in range(G.n)
        ]
        self.size = len(core)

    def delete(self, v: int) -> list[int]:
        """Remove ``v`` (if still in the core) and peel; return removed vertices
        in removal order so :meth:`undo` can restore them."""
        alive, deg, adj, k = self.alive, self.deg, self.G.adjacency, self.k
        if not alive[v]:
            return []
        # a vertex is marked dead when processed, not when queued, so every
        # edge to a later-processed vertex is decremented exactly once and
        # undo can replay the increments in reverse
        removed = [v]
        i = 0
        while i < len(removed):
            u = removed[i]
            i += 1
            alive[u] = False
            for w in adj[u]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == k - 1:
                        removed.append(w)
        self.size -= len(removed)
        return removed

    def undo(self, removed: list[int]) -> None:
        alive, deg, adj = self.alive, self.deg, self.G.adjacency
        for u in reversed(removed):
            for w in adj[u]:
                if alive[w]:
                    deg[w] += 1
            alive[u] = True
        self.size += len(removed)

    def core(self) -> list[int]:
        return [v for v, a in enumerate(self.alive) if a]
