"""Instance builders: equivalence-preserving transforms, the clique reduction,
the corrected OR gadget, and seeded random instances."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import PreconditionError
from .graph import Graph, build_graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014).

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

    all arithmetic mod 2**64. ``below(n)`` uses ``next() % n`` and ``unit()``
    uses the top 53 bits, ``(next() >> 11) / 2**53``.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def unit(self) -> float:
        return (self.next() >> 11) / float(1 << 53)


@dataclass(frozen=True)
class Instance:
    graph: Graph
    b: int
    x: int
    k: int
    label: str = ""

    def __post_init__(self):
        n = self.graph.n
        if self.b < 0 or self.x < 0:
            raise PreconditionError("b and x must be non-negative")
        if self.k < 1:
            raise PreconditionError("k must be at least 1")
        if self.b > n or self.x > n:
            raise PreconditionError(f"b={self.b}, x={self.x} must not exceed n={n}")

    def sidecar(self) -> dict:
        return {"b": self.b, "x": self.x, "k": self.k, "label": self.label}


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shifted = [(u + G.n, v + G.n) for u, v in H.edges]
    return build_graph(G.n + H.n, list(G.edges) + shifted)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def pad_core_target(inst: Instance, x_new: int) -> Instance:
    """Turn an x = 0 instance into an equivalent one with residual bound ``x_new``.

    For ``x_new <= k`` the graph is unchanged (a k-core needs more than k
    vertices); otherwise a disjoint clique on ``x_new`` vertices is added.
    """
    if inst.x != 0:
        raise PreconditionError("pad_core_target expects an instance with x = 0")
    if x_new < 1:
        raise PreconditionError("x_new must be positive")
    if x_new <= inst.k:
        if x_new > inst.graph.n:
            raise PreconditionError(f"x_new={x_new} exceeds n={inst.graph.n}")
        graph = inst.graph
    else:
        graph = disjoint_union(inst.graph, complete_graph(x_new))
    return Instance(graph, inst.b, x_new, inst.k, f"{inst.label}+pad{x_new}")


def add_universal(inst: Instance) -> Instance:
    """Add one vertex adjacent to everything and raise the budget by one."""
    G = inst.graph
    u = G.n
    graph = build_graph(G.n + 1, list(G.edges) + [(v, u) for v in range(G.n)])
    return Instance(graph, inst.b + 1, inst.x, inst.k, f"{inst.label}+universal")


def clique_to_collapse(G: Graph, p: int, k: int) -> Instance:
    """Reduce "does G have a clique on p vertices" to Collapsed k-Core.

    Vertex layout of the output: originals keep ids ``0..n-1``; for the j-th
    edge of ``G.edges`` and i in 1..k, u(j, i) = ``n + j*k + i - 1``; for
    i' in 1..k-1, w(j, i') = ``n + m*k + j*(k-1) + i' - 1``. Each u is joined to
    both endpoints of its edge and to every w of the same edge. Budget is p and
    the residual bound is |V'| - (p + (2k-1) * C(p, 2)).
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if p < 1 or p > G.n:
        raise PreconditionError(f"need 1 <= p <= n, got p={p}, n={G.n}")
    low = [v for v in range(G.n) if G.degree(v) < p + 1]
    if low:
        raise PreconditionError(f"vertices {low} have degree below p+1={p + 1}")

    n, m = G.n, G.m
    size = n + m * k + m * (k - 1)
    edges: list[tuple[int, int]] = []
    for j, (a, c) in enumerate(G.edges):
        us = [n + j * k + i for i in range(k)]
        ws = [n + m * k + j * (k - 1) + i for i in range(k - 1)]
        for u in us:
            edges.append((a, u))
            edges.append((c, u))
            for w in ws:
                edges.append((u, w))
    x = size - (p + (2 * k - 1) * comb(p, 2))
    return Instance(build_graph(size, edges), p, x, k, f"clique-p{p}-k{k}")


# Corrected OR gadget, two inputs:
#
#   0     4      <- input row (0: predecessor 1, 4: predecessor 2)
#   | \ / |
#   |  X  |
#   1     5
#   |     |
#   2     6
#   | \ / |
#   |  3  |
#    \ | /
#      7         <- output vertex v^o
#
# 0 and 4 are both adjacent to 1 and 5; 3 is adjacent to 2, 6 and 7; 2 and 6
# are also adjacent to 7.
OR_GADGET_EDGES = (
    (0, 1), (0, 5), (4, 1), (4, 5),
    (1, 2), (5, 6),
    (2, 3), (2, 7), (6, 3), (6, 7), (3, 7),
)
OR_GADGET_INPUTS = (0, 4)
OR_GADGET_OUTPUT = 7


def or_gadget() -> Graph:
    return build_graph(8, OR_GADGET_EDGES)


def boosted_or_gadget() -> Graph:
    """The OR gadget with each input vertex tied by one edge to its own K4.

    Vertices 8..11 and 12..15 are the two K4s; 8 is joined to input 0 and 12
    to input 4, which lifts both inputs to degree 3.
    """
    edges = list(OR_GADGET_EDGES)
    for base, inp in ((8, OR_GADGET_INPUTS[0]), (12, OR_GADGET_INPUTS[1])):
        edges += [(base + i, base + j) for i, j in combinations(range(4), 2)]
        edges.append((inp, base))
    return build_graph(16, edges)


def random_graph(rng: SplitMix64, n: int, density: float, m_max: int | None = None) -> Graph:
    """G(n, density) over pairs in lexicographic order, one ``unit()`` draw per
    pair. If more than ``m_max`` edges result, a Fisher-Yates shuffle
    (``below(i+1)`` for i from the end) keeps the first ``m_max``."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.unit() < density
    ]
    if m_max is not None and len(edges) > m_max:
        for i in range(len(edges) - 1, 0, -1):
            j = rng.below(i + 1)
            edges[i], edges[j] = edges[j], edges[i]
        edges = edges[:m_max]
    return build_graph(n, edges)


def random_instance(
    seed: int,
    n_max: int,
    density: float,
    b_max: int,
    x_max: int,
    k: int,
    m_max: int | None = None,
) -> Instance:
    """Seeded random instance.

    Draw order from ``SplitMix64(seed)``: n = 1 + below(n_max), the graph as in
    :func:`random_graph`, then b = below(b_max+1) and x = below(x_max+1); b and
    x are clamped to n.
    """
    if n_max < 1:
        raise PreconditionError("n_max must be at least 1")
    rng = SplitMix64(seed)
    n = 1 + rng.below(n_max)
    graph = random_graph(rng, n, density, m_max)
    b = min(rng.below(b_max + 1), n)
    x = min(rng.below(x_max + 1), n)
    label = f"rand-s{seed}-n{n}-m{graph.m}-b{b}-x{x}-k{k}"
    return Instance(graph, b, x, k, label)
