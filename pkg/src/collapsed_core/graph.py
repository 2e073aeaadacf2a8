"""Immutable simple graphs and k-core peeling.

Vertex ids are always ``0..n-1``. Sets of vertices are passed around as
``frozenset[int]``; anything that is reported or serialized is sorted first.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateEdgeError, SelfLoopError, VertexOutOfRangeError

VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with sorted adjacency lists.

    Build through :func:`build_graph`; the constructor trusts its input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        adj = self.adjacency[u]
        i = bisect_left(adj, v)
        return i < len(adj) and adj[i] == v

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph on ``keep`` relabelled to 0..len-1,
        together with the new-id -> old-id mapping."""
        old = sorted(set(keep))
        new_id = {v: i for i, v in enumerate(old)}
        edges = [
            (new_id[u], new_id[v])
            for u, v in self.edges
            if u in new_id and v in new_id
        ]
        return build_graph(len(old), edges), old


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises SelfLoopError, DuplicateEdgeError or VertexOutOfRangeError
    instead of silently repairing the input.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if w < 0 or w >= n:
                raise VertexOutOfRangeError(w, n)
        if u == v:
            raise SelfLoopError(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(*key)
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
    )


@dataclass(frozen=True)
class PeelResult:
    core: frozenset[int]
    eliminated: tuple[tuple[int, int], ...]

    @property
    def collapsed(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.eliminated)


def k_core(G: Graph, k: int, deleted: Iterable[int] = ()) -> PeelResult:
    """k-core of ``G - deleted`` plus the order in which vertices were peeled.

    FIFO peel: vertices below degree ``k`` are queued in ascending id order,
    later ones in the order their degree drops below ``k``. Each elimination
    records the vertex and its degree at the moment it was removed.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    alive = [True] * G.n
    for v in deleted:
        if v < 0 or v >= G.n:
            raise VertexOutOfRangeError(v, G.n)
        alive[v] = False
    adj = G.adjacency
    deg = [0] * G.n
    for v in range(G.n):
        if alive[v]:
            deg[v] = sum(1 for w in adj[v] if alive[w])

    queued = [False] * G.n
    queue: deque[int] = deque()
    for v in range(G.n):
        if alive[v] and deg[v] < k:
            queued[v] = True
            queue.append(v)

    eliminated: list[tuple[int, int]] = []
    while queue:
        v = queue.popleft()
        alive[v] = False
        eliminated.append((v, deg[v]))
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < k and not queued[w]:
                    queued[w] = True
                    queue.append(w)

    core = frozenset(v for v in range(G.n) if alive[v])
    return PeelResult(core=core, eliminated=tuple(eliminated))


def core_numbers(G: Graph) -> list[int]:
    """Core number of every vertex (bucket-queue min-degree removal)."""
    n = G.n
    if n == 0:
        return []
    deg = [G.degree(v) for v in range(n)]
    max_deg = max(deg)
    buckets: list[set[int]] = [set() for _ in range(max_deg + 1)]
    for v in range(n):
        buckets[deg[v]].add(v)
    removed = [False] * n
    core = [0] * n
    current = 0
    d = 0
    for _ in range(n):
        d = max(0, d - 1)
        while not buckets[d]:
            d += 1
        v = buckets[d].pop()
        removed[v] = True
        current = max(current, d)
        core[v] = current
        for w in G.adjacency[v]:
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
    return core


def degeneracy(G: Graph) -> int:
    """Smallest r such that every subgraph has a vertex of degree <= r."""
    return max(core_numbers(G), default=0)


def components(G: Graph, restrict: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``G[restrict]``.

    Ordered by size descending, then by smallest member ascending.
    """
    if restrict is None:
        inside = [True] * G.n
        members = range(G.n)
    else:
        members = sorted(set(restrict))
        inside = [False] * G.n
        for v in members:
            inside[v] = True
    seen = [False] * G.n
    comps: list[frozenset[int]] = []
    for s in members:
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            v = stack.pop()
            for w in G.adjacency[v]:
                if inside[w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def is_cycle_component(G: Graph, comp: Iterable[int]) -> bool:
    """True iff every vertex of the (connected) component has degree 2 inside it."""
    members = set(comp)
    if len(members) < 3:
        return False
    return all(
        sum(1 for w in G.adjacency[v] if w in members) == 2 for v in members
    )


def stable_core(G: Graph, k: int, b: int) -> frozenset[int]:
    """The (k+b)-core: vertices no deletion of at most ``b`` others can collapse."""
    if k < 0 or b < 0:
        raise ValueError("k and b must be non-negative")
    return k_core(G, k + b).core
